#pragma once

// Deterministic automata over Ostrowski digit alphabets.
//
// Every state carries a verdict. Builders fold digit validity into the
// machine, so a word that breaks conditions (a)-(c) ends in an `invalid`
// state rather than a plain `reject` one. The dead state is absorbing.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/numeration.hpp"

namespace walklab {

enum class Verdict { accept, reject, invalid };

std::string_view to_string(Verdict v);

class DigitDfa {
 public:
  using State = std::uint32_t;

  // All transitions start out pointing at `dead`, which absorbs every digit.
  DigitDfa(std::string name, std::size_t states, Digit alphabet, State start, State dead,
           Verdict dead_verdict, DigitOrder direction);

  void set_transition(State from, Digit digit, State to);
  void set_verdict(State s, Verdict v);

  const std::string& name() const { return name_; }
  std::size_t size() const { return verdicts_.size(); }
  Digit alphabet() const { return alphabet_; }
  State start() const { return start_; }
  State dead() const { return dead_; }
  DigitOrder direction() const { return direction_; }

  State next(State s, Digit d) const { return table_[static_cast<std::size_t>(s) * alphabet_ + d]; }
  Verdict verdict(State s) const { return verdicts_[s]; }
  bool accepting(State s) const { return verdicts_[s] == Verdict::accept; }

  // Totality, dead-state absorption, and a non-accepting dead state.
  bool well_formed() const;

  friend bool operator==(const DigitDfa&, const DigitDfa&) = default;

 private:
  std::string name_;
  Digit alphabet_;
  State start_;
  State dead_;
  DigitOrder direction_;
  std::vector<State> table_;
  std::vector<Verdict> verdicts_;
};

// Runs the digits, given in `order`, reversing them when the machine reads
// the other way. Throws AlphabetMismatch on a digit outside the alphabet.
Verdict run(const DigitDfa& dfa, std::span<const Digit> digits, DigitOrder order);
Verdict run(const DigitDfa& dfa, const OstrowskiWord& w);

// lsd machine for words whose even-position digits are all zero.
// Throws NotBrNumber unless the base is a BR-number.
DigitDfa build_zero_dfa(const OstrowskiBase& base);

// lsd machine: odd digits 0, even digits a_{i+1}/2 up to one position where
// the digit is smaller, zeros after that.
DigitDfa build_record_dfa(const OstrowskiBase& base);

// The same two languages checked directly on a canonical word.
bool zero_digits(const OstrowskiWord& w);
bool record_digits(const OstrowskiWord& w, const OstrowskiBase& base);

// Hand-written msd machines over Pell digits {0, 1, 2} for the printed
// languages: records_sqrt2 = 1*, records_2sqrt2 = (10)*1,
// zeros_2sqrt2 = ε | (10|20)(00|10|20)*. Words outside the language are
// rejected; these machines do not check digit validity.
DigitDfa hardcoded_fixture(std::string_view name);

struct Mismatch {
  std::uint64_t n;
  bool expected;
  Verdict got;
};

// Compares run(dfa, encode(n)) == accept against predicate(n) for n <= bound.
// The predicate is called concurrently.
std::optional<Mismatch> equiv_oracle(const DigitDfa& dfa, const std::function<bool(std::uint64_t)>& predicate,
                                     const OstrowskiBase& base, std::uint64_t bound, bool parallel = true);

struct DotOptions {
  bool include_dead = false;
};

// Accepting states are double circles, invalid states dashed. Output is
// byte-stable for a fixed machine.
std::string to_dot(const DigitDfa& dfa, const DotOptions& options = {});

// Plain transition table: a header then one "state verdict t_0 .. t_{k-1}" row
// per state.
std::string to_table(const DigitDfa& dfa);

}  // namespace walklab
