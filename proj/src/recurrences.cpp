#include "walklab/recurrences.hpp"

#include <stdexcept>

namespace walklab {

namespace {

// t_j with t_j = 0 for j <= 0; terms holds t_1.. so t_j = terms[j - 1].
BigInt t_at(const std::vector<BigInt>& terms, long j) {
  return j <= 0 ? BigInt(0) : terms[static_cast<std::size_t>(j - 1)];
}

BigInt sqrt3_step(const std::vector<BigInt>& t, long j) {
  const long base = ((j - 1) / 4) * 4;  // 4n
  switch ((j - 1) % 4) {
    case 0:
      return 2 * t_at(t, base) + t_at(t, base - 1) + 1;
    case 1:
      return t_at(t, base + 1) + 2 * t_at(t, base) + 1;
    case 2:
      return t_at(t, base + 2) + 2 * t_at(t, base) + 1;
    default:
      return 2 * t_at(t, base + 3) + t_at(t, base) + 1;
  }
}

RecurrenceSeq two_term(std::string name, RecurrenceRule rule, std::size_t first_index, BigInt x0, BigInt x1,
                       std::size_t count) {
  RecurrenceSeq seq{std::move(name), rule, first_index, {x0, x1}, {}};
  seq.terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 2) {
      seq.terms.push_back(seq.initial[i]);
      continue;
    }
    const BigInt& p = seq.terms[i - 1];
    const BigInt& pp = seq.terms[i - 2];
    switch (rule) {
      case RecurrenceRule::lune:
        seq.terms.push_back(2 * p + pp + 1);
        break;
      case RecurrenceRule::kotesovec:
        seq.terms.push_back(6 * p - pp + 2);
        break;
      case RecurrenceRule::half_pell:
        seq.terms.push_back(6 * p - pp);
        break;
      case RecurrenceRule::sqrt3:
        throw std::logic_error("sqrt3 is not a two-term recurrence");
    }
  }
  return seq;
}

}  // namespace

bool RecurrenceSeq::satisfies_rule() const {
  if (rule == RecurrenceRule::sqrt3) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i] != sqrt3_step(terms, static_cast<long>(i + 1))) return false;
    }
    return true;
  }
  for (std::size_t i = 2; i < terms.size(); ++i) {
    const BigInt& p = terms[i - 1];
    const BigInt& pp = terms[i - 2];
    BigInt expect;
    switch (rule) {
      case RecurrenceRule::lune:
        expect = 2 * p + pp + 1;
        break;
      case RecurrenceRule::kotesovec:
        expect = 6 * p - pp + 2;
        break;
      default:
        expect = 6 * p - pp;
        break;
    }
    if (terms[i] != expect) return false;
  }
  return true;
}

RecurrenceSeq lune_records(std::size_t n) { return two_term("lune", RecurrenceRule::lune, 0, 0, 1, n + 1); }

RecurrenceSeq kotesovec(std::size_t n, Side side) {
  return side == Side::A ? two_term("kotesovecA", RecurrenceRule::kotesovec, 0, 0, 3, n + 1)
                         : two_term("kotesovecB", RecurrenceRule::kotesovec, 0, 0, 1, n + 1);
}

RecurrenceSeq half_pell(std::size_t n) {
  RecurrenceSeq seq = two_term("halfpell", RecurrenceRule::half_pell, 0, 0, 1, n + 1);
  seq.terms.erase(seq.terms.begin());
  seq.first_index = 1;
  return seq;
}

RecurrenceSeq sqrt3_records(std::size_t n) {
  RecurrenceSeq seq{"sqrt3", RecurrenceRule::sqrt3, 1, {0}, {}};
  seq.terms.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) seq.terms.push_back(sqrt3_step(seq.terms, static_cast<long>(j)));
  return seq;
}

RecurrenceSeq recurrence_by_name(std::string_view name, std::size_t n) {
  if (name == "lune") return lune_records(n);
  if (name == "kotesovecA") return kotesovec(n, Side::A);
  if (name == "kotesovecB") return kotesovec(n, Side::B);
  if (name == "halfpell") return half_pell(n);
  if (name == "sqrt3") return sqrt3_records(n);
  throw std::invalid_argument("unknown recurrence '" + std::string(name) + "'");
}

}  // namespace walklab
