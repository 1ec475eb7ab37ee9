#include "walklab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "walklab/kernels.hpp"

namespace walklab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::accept:
      return "accept";
    case Verdict::reject:
      return "reject";
    case Verdict::invalid:
      return "invalid";
  }
  return "?";
}

DigitDfa::DigitDfa(std::string name, std::size_t states, Digit alphabet, State start, State dead,
                   Verdict dead_verdict, DigitOrder direction)
    : name_(std::move(name)),
      alphabet_(alphabet),
      start_(start),
      dead_(dead),
      direction_(direction),
      table_(states * alphabet, dead),
      verdicts_(states, Verdict::reject) {
  if (alphabet == 0) throw std::invalid_argument("empty digit alphabet");
  if (start >= states || dead >= states) throw std::invalid_argument("state out of range");
  if (dead_verdict == Verdict::accept) throw std::invalid_argument("dead state cannot accept");
  verdicts_[dead] = dead_verdict;
}

void DigitDfa::set_transition(State from, Digit digit, State to) {
  if (from >= size() || to >= size() || digit >= alphabet_) throw std::out_of_range("transition out of range");
  table_[static_cast<std::size_t>(from) * alphabet_ + digit] = to;
}

void DigitDfa::set_verdict(State s, Verdict v) {
  if (s >= size()) throw std::out_of_range("state out of range");
  verdicts_[s] = v;
}

bool DigitDfa::well_formed() const {
  if (table_.size() != size() * alphabet_) return false;
  if (std::any_of(table_.begin(), table_.end(), [&](State t) { return t >= size(); })) return false;
  for (Digit d = 0; d < alphabet_; ++d) {
    if (next(dead_, d) != dead_) return false;
  }
  return verdicts_[dead_] != Verdict::accept;
}

Verdict run(const DigitDfa& dfa, std::span<const Digit> digits, DigitOrder order) {
  const auto step = [&](DigitDfa::State s, Digit d) {
    if (d >= dfa.alphabet()) {
      throw AlphabetMismatch("digit " + std::to_string(d) + " outside alphabet of size " +
                             std::to_string(dfa.alphabet()) + " for " + dfa.name());
    }
    return dfa.next(s, d);
  };
  DigitDfa::State s = dfa.start();
  if (order == dfa.direction()) {
    for (const Digit d : digits) s = step(s, d);
  } else {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s = step(s, *it);
  }
  return dfa.verdict(s);
}

Verdict run(const DigitDfa& dfa, const OstrowskiWord& w) { return run(dfa, w.digits, DigitOrder::lsd); }

namespace {

// Digit positions of an lsd reader, folded onto a finite cycle. Position 0 is
// kept apart for condition (a); from `cycle_start` on, a_{i+1} is periodic, and
// the cycle length is even so position parity survives the wrap.
class PositionCycle {
 public:
  explicit PositionCycle(const ContinuedFraction& cf) {
    const std::size_t pre = cf.preperiod().size();
    const std::size_t per = cf.period().size();
    cycle_start_ = std::max<std::size_t>(1, pre == 0 ? 1 : pre - 1);
    cycle_length_ = per % 2 == 0 ? per : 2 * per;
  }
  std::size_t count() const { return cycle_start_ + cycle_length_; }
  std::size_t next(std::size_t i) const { return i + 1 < count() ? i + 1 : cycle_start_; }

 private:
  std::size_t cycle_start_;
  std::size_t cycle_length_;
};

enum class Mode : std::uint8_t { exact, zeros, failed };

struct Key {
  std::size_t pos;
  bool prev_zero;
  Mode mode;
  auto operator<=>(const Key&) const = default;
};

// Breadth-first construction over abstract keys; states are numbered in
// discovery order and the dead state comes last.
template <class Step, class Judge>
DigitDfa explore(std::string name, Digit alphabet, Key start, Step step, Judge judge) {
  std::map<Key, DigitDfa::State> ids{{start, 0}};
  std::vector<Key> keys{start};
  std::vector<std::vector<std::optional<Key>>> edges;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    std::vector<std::optional<Key>> row(alphabet);
    for (Digit d = 0; d < alphabet; ++d) {
      row[d] = step(keys[k], d);
      if (row[d] && ids.emplace(*row[d], static_cast<DigitDfa::State>(keys.size())).second) {
        keys.push_back(*row[d]);
      }
    }
    edges.push_back(std::move(row));
  }
  const auto dead = static_cast<DigitDfa::State>(keys.size());
  DigitDfa dfa(std::move(name), keys.size() + 1, alphabet, 0, dead, Verdict::invalid, DigitOrder::lsd);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    dfa.set_verdict(static_cast<DigitDfa::State>(k), judge(keys[k]));
    for (Digit d = 0; d < alphabet; ++d) {
      if (edges[k][d]) dfa.set_transition(static_cast<DigitDfa::State>(k), d, ids.at(*edges[k][d]));
    }
  }
  return dfa;
}

bool valid_digit(const OstrowskiBase& base, std::size_t pos, bool prev_zero, Digit d) {
  const Digit a = base.quotient_after(pos);
  if (pos == 0) return d < a;
  return d < a || (d == a && prev_zero);
}

void require_br(const OstrowskiBase& base) {
  if (!is_br(base.cf())) {
    throw NotBrNumber("base " + base.cf().to_string() + " is not a BR-number");
  }
}

}  // namespace

DigitDfa build_zero_dfa(const OstrowskiBase& base) {
  require_br(base);
  const PositionCycle cycle(base.cf());
  const auto step = [&](const Key& k, Digit d) -> std::optional<Key> {
    if (!valid_digit(base, k.pos, k.prev_zero, d)) return std::nullopt;
    const bool fails = k.mode == Mode::failed || (k.pos % 2 == 0 && d != 0);
    return Key{cycle.next(k.pos), d == 0, fails ? Mode::failed : Mode::exact};
  };
  const auto judge = [](const Key& k) { return k.mode == Mode::failed ? Verdict::reject : Verdict::accept; };
  return explore("zeros " + base.cf().to_string(), base.max_digit() + 1, Key{0, true, Mode::exact}, step, judge);
}

DigitDfa build_record_dfa(const OstrowskiBase& base) {
  require_br(base);
  const PositionCycle cycle(base.cf());
  const auto step = [&](const Key& k, Digit d) -> std::optional<Key> {
    if (!valid_digit(base, k.pos, k.prev_zero, d)) return std::nullopt;
    Mode mode = Mode::failed;
    switch (k.mode) {
      case Mode::exact:
        if (k.pos % 2 == 1) {
          mode = d == 0 ? Mode::exact : Mode::failed;
        } else {
          const Digit half = base.quotient_after(k.pos) / 2;
          mode = d == half ? Mode::exact : (d < half ? Mode::zeros : Mode::failed);
        }
        break;
      case Mode::zeros:
        mode = d == 0 ? Mode::zeros : Mode::failed;
        break;
      case Mode::failed:
        break;
    }
    return Key{cycle.next(k.pos), d == 0, mode};
  };
  const auto judge = [](const Key& k) { return k.mode == Mode::failed ? Verdict::reject : Verdict::accept; };
  return explore("records " + base.cf().to_string(), base.max_digit() + 1, Key{0, true, Mode::exact}, step,
                 judge);
}

bool zero_digits(const OstrowskiWord& w) {
  for (std::size_t i = 0; i < w.size(); i += 2) {
    if (w.digits[i] != 0) return false;
  }
  return true;
}

bool record_digits(const OstrowskiWord& w, const OstrowskiBase& base) {
  const OstrowskiWord c = w.canonical();
  if (c.empty()) return true;
  const std::size_t n = c.size() - 1;
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i <= n; ++i) {
    const Digit b = c.digits[i];
    const Digit half = base.quotient_after(i) / 2;
    if (i % 2 == 1 ? b != 0 : (i < n ? b != half : b > half)) return false;
  }
  return true;
}

DigitDfa hardcoded_fixture(std::string_view name) {
  if (name == "records_sqrt2") {
    DigitDfa dfa("records_sqrt2", 2, 3, 0, 1, Verdict::reject, DigitOrder::msd);
    dfa.set_verdict(0, Verdict::accept);
    dfa.set_transition(0, 1, 0);
    return dfa;
  }
  if (name == "records_2sqrt2") {
    DigitDfa dfa("records_2sqrt2", 3, 3, 0, 2, Verdict::reject, DigitOrder::msd);
    dfa.set_verdict(1, Verdict::accept);
    dfa.set_transition(0, 1, 1);
    dfa.set_transition(1, 0, 0);
    return dfa;
  }
  if (name == "zeros_2sqrt2") {
    DigitDfa dfa("zeros_2sqrt2", 5, 3, 0, 4, Verdict::reject, DigitOrder::msd);
    dfa.set_verdict(0, Verdict::accept);
    dfa.set_verdict(2, Verdict::accept);
    dfa.set_transition(0, 1, 1);
    dfa.set_transition(0, 2, 1);
    dfa.set_transition(1, 0, 2);
    for (Digit d = 0; d < 3; ++d) dfa.set_transition(2, d, 3);
    dfa.set_transition(3, 0, 2);
    return dfa;
  }
  throw UnknownFixture("unknown automaton fixture '" + std::string(name) + "'");
}

std::optional<Mismatch> equiv_oracle(const DigitDfa& dfa, const std::function<bool(std::uint64_t)>& predicate,
                                     const OstrowskiBase& base, std::uint64_t bound, bool parallel) {
  const auto bad = [&](std::uint64_t n) {
    return (run(dfa, encode(n, base)) == Verdict::accept) != predicate(n);
  };
  const std::optional<std::uint64_t> first =
      parallel ? kernels::parallel::first_index(bound + 1, bad) : kernels::serial::first_index(bound + 1, bad);
  if (!first) return std::nullopt;
  return Mismatch{*first, predicate(*first), run(dfa, encode(*first, base))};
}

std::string to_dot(const DigitDfa& dfa, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph \"" << dfa.name() << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  comment=\"direction=" << (dfa.direction() == DigitOrder::lsd ? "lsd" : "msd") << "\";\n";
  os << "  node [shape=circle];\n";
  os << "  start [shape=point];\n";
  os << "  start -> " << dfa.start() << ";\n";
  const auto shown = [&](DigitDfa::State s) { return options.include_dead || s != dfa.dead(); };
  for (DigitDfa::State s = 0; s < dfa.size(); ++s) {
    if (!shown(s)) continue;
    os << "  " << s;
    switch (dfa.verdict(s)) {
      case Verdict::accept:
        os << " [shape=doublecircle]";
        break;
      case Verdict::invalid:
        os << " [style=dashed]";
        break;
      case Verdict::reject:
        break;
    }
    os << ";\n";
  }
  for (DigitDfa::State s = 0; s < dfa.size(); ++s) {
    if (!shown(s)) continue;
    std::map<DigitDfa::State, std::vector<Digit>> by_target;
    for (Digit d = 0; d < dfa.alphabet(); ++d) by_target[dfa.next(s, d)].push_back(d);
    for (const auto& [t, digits] : by_target) {
      if (!shown(t)) continue;
      os << "  " << s << " -> " << t << " [label=\"";
      for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_table(const DigitDfa& dfa) {
  std::ostringstream os;
  os << "# " << dfa.name() << "\n";
  os << "states " << dfa.size() << "\n";
  os << "alphabet " << dfa.alphabet() << "\n";
  os << "start " << dfa.start() << "\n";
  os << "dead " << dfa.dead() << "\n";
  os << "direction " << (dfa.direction() == DigitOrder::lsd ? "lsd" : "msd") << "\n";
  for (DigitDfa::State s = 0; s < dfa.size(); ++s) {
    os << s << ' ' << to_string(dfa.verdict(s));
    for (Digit d = 0; d < dfa.alphabet(); ++d) os << ' ' << dfa.next(s, d);
    os << "\n";
  }
  return os.str();
}

}  // namespace walklab
