#pragma once

// Ostrowski numeration over the convergent denominators q_i of a quadratic
// irrational. N = sum b_i q_i with
//   (a) 0 <= b_0 < a_1
//   (b) 0 <= b_i <= a_{i+1} for i >= 1
//   (c) b_i = a_{i+1} implies b_{i-1} = 0
// Pell numeration is the base sqrt(2) - 1.
//
// Digits are stored least-significant first. Text is msd unless asked
// otherwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/bigint.hpp"
#include "walklab/qarith.hpp"

namespace walklab {

using Digit = std::uint32_t;

enum class DigitOrder { lsd, msd };

class OstrowskiBase {
 public:
  explicit OstrowskiBase(ContinuedFraction cf);
  explicit OstrowskiBase(const QuadraticSurd& xi) : OstrowskiBase(cf_expand(xi)) {}

  const ContinuedFraction& cf() const { return cf_; }

  // a_{i+1}: the largest digit condition (b) admits at position i.
  Digit quotient_after(std::size_t i) const {
    return i < quotients_.size() ? quotients_[i] : slow_quotient_after(i);
  }

  // q_i
  BigInt place_value(std::size_t i) const;

  // q_0, q_1, ... every denominator below 2^63.
  std::span<const std::uint64_t> place_values_u64() const { return q64_; }

  // Largest digit that can appear anywhere; the alphabet is {0..max_digit}.
  Digit max_digit() const { return max_digit_; }

 private:
  Digit slow_quotient_after(std::size_t i) const;

  ContinuedFraction cf_;
  std::vector<Digit> quotients_;
  std::vector<std::uint64_t> q64_;
  Digit max_digit_ = 0;
};

struct OstrowskiWord {
  std::vector<Digit> digits;  // b_0 first

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }
  // Drops most-significant zeros.
  OstrowskiWord canonical() const;
  std::vector<Digit> msd() const { return {digits.rbegin(), digits.rend()}; }
  static OstrowskiWord from_msd(std::span<const Digit> msd_digits) {
    return {{msd_digits.rbegin(), msd_digits.rend()}};
  }

  friend bool operator==(const OstrowskiWord&, const OstrowskiWord&) = default;
};

struct Violation {
  std::size_t position;  // lsd index i of the offending digit
  char condition;        // 'a', 'b' or 'c'
  std::string message;
};

struct Validation {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

// Greedy expansion from the largest q_i <= n downward.
OstrowskiWord encode(const BigInt& n, const OstrowskiBase& base);
OstrowskiWord encode(std::uint64_t n, const OstrowskiBase& base);

// Throws InvalidDigits when the digits fail validation.
BigInt decode(const OstrowskiWord& w, const OstrowskiBase& base);
// Unchecked fast path for valid words whose value fits 64 bits.
std::uint64_t decode_u64(std::span<const Digit> lsd_digits, const OstrowskiBase& base);

Validation validate(std::span<const Digit> lsd_digits, const OstrowskiBase& base);

// Concatenated digits when the alphabet fits in {0..9}, comma separated
// otherwise. The empty word renders as "".
std::string format_word(const OstrowskiWord& w, const OstrowskiBase& base,
                        DigitOrder order = DigitOrder::msd);
// Accepts the format_word output; "" and "ε" are the empty word.
OstrowskiWord parse_word(std::string_view text, DigitOrder order = DigitOrder::msd);

// Pell numbers with P_0 = 0, P_1 = 1, aliased onto the convergent
// denominators of sqrt(2) - 1 via P_n = q_{n-1}.
BigInt pell(std::size_t n);

const OstrowskiBase& pell_base();

}  // namespace walklab
