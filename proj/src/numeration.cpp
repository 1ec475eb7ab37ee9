#include "walklab/numeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace walklab {

namespace {

Digit to_digit(const BigInt& a) {
  if (a > std::numeric_limits<Digit>::max()) {
    throw std::invalid_argument("partial quotient " + a.str() + " too large for a digit alphabet");
  }
  return static_cast<Digit>(a);
}

// Number of digit positions kept in the quotient cache.
constexpr std::size_t kCachedPositions = 256;

}  // namespace

OstrowskiBase::OstrowskiBase(ContinuedFraction cf) : cf_(std::move(cf)) {
  quotients_.reserve(kCachedPositions);
  for (std::size_t i = 0; i < kCachedPositions; ++i) {
    quotients_.push_back(to_digit(cf_.partial_quotient(i + 1)));
  }
  max_digit_ = to_digit(cf_.max_tail_quotient());

  const BigInt limit = BigInt(1) << 63;
  BigInt prev = 0, cur = 1;
  for (std::size_t i = 0; cur < limit; ++i) {
    q64_.push_back(static_cast<std::uint64_t>(cur));
    BigInt next = cf_.partial_quotient(i + 1) * cur + prev;
    prev = std::exchange(cur, std::move(next));
  }
}

Digit OstrowskiBase::slow_quotient_after(std::size_t i) const {
  return to_digit(cf_.partial_quotient(i + 1));
}

BigInt OstrowskiBase::place_value(std::size_t i) const {
  if (i < q64_.size()) return q64_[i];
  BigInt prev = q64_[q64_.size() - 2], cur = q64_.back();
  for (std::size_t k = q64_.size() - 1; k < i; ++k) {
    BigInt next = cf_.partial_quotient(k + 1) * cur + prev;
    prev = std::exchange(cur, std::move(next));
  }
  return cur;
}

OstrowskiWord OstrowskiWord::canonical() const {
  OstrowskiWord out = *this;
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  return out;
}

OstrowskiWord encode(std::uint64_t n, const OstrowskiBase& base) {
  const auto q = base.place_values_u64();
  if (n >= q.back()) return encode(BigInt(n), base);
  OstrowskiWord w;
  if (n == 0) return w;
  // Largest i with q_i <= n.
  const auto it = std::upper_bound(q.begin(), q.end(), n);
  const auto top = static_cast<std::size_t>(it - q.begin()) - 1;
  w.digits.assign(top + 1, 0);
  std::uint64_t rem = n;
  for (std::size_t i = top + 1; i-- > 0;) {
    const std::uint64_t b = std::min<std::uint64_t>(rem / q[i], base.quotient_after(i));
    w.digits[i] = static_cast<Digit>(b);
    rem -= b * q[i];
  }
  return w;
}

OstrowskiWord encode(const BigInt& n, const OstrowskiBase& base) {
  if (n < 0) throw std::invalid_argument("cannot encode a negative integer");
  if (n < BigInt(base.place_values_u64().back())) return encode(static_cast<std::uint64_t>(n), base);
  const std::vector<BigInt> q = denominators_through(base.cf(), n);
  // q.back() > n; q[top] is the largest place value <= n.
  std::size_t top = q.size() - 2;
  OstrowskiWord w;
  w.digits.assign(top + 1, 0);
  BigInt rem = n;
  for (std::size_t i = top + 1; i-- > 0;) {
    BigInt b = rem / q[i];
    const BigInt cap = base.quotient_after(i);
    if (b > cap) b = cap;
    w.digits[i] = static_cast<Digit>(b);
    rem -= b * q[i];
  }
  return w;
}

Validation validate(std::span<const Digit> d, const OstrowskiBase& base) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Digit a = base.quotient_after(i);
    if (i == 0 && d[0] >= a) {
      return {Violation{0, 'a', "b_0 = " + std::to_string(d[0]) + " must be < a_1 = " + std::to_string(a)}};
    }
    if (d[i] > a) {
      return {Violation{i, 'b', "b_" + std::to_string(i) + " = " + std::to_string(d[i]) +
                                    " exceeds a_" + std::to_string(i + 1) + " = " + std::to_string(a)}};
    }
    if (i > 0 && d[i] == a && d[i - 1] != 0) {
      return {Violation{i, 'c', "b_" + std::to_string(i) + " = a_" + std::to_string(i + 1) +
                                    " requires b_" + std::to_string(i - 1) + " = 0"}};
    }
  }
  return {};
}

BigInt decode(const OstrowskiWord& w, const OstrowskiBase& base) {
  if (const auto v = validate(w.digits, base); !v) {
    throw InvalidDigits("invalid Ostrowski digits: condition (" + std::string(1, v.violation->condition) +
                        ") " + v.violation->message);
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < w.digits.size(); ++i) {
    if (w.digits[i] != 0) sum += base.place_value(i) * w.digits[i];
  }
  return sum;
}

std::uint64_t decode_u64(std::span<const Digit> d, const OstrowskiBase& base) {
  const auto q = base.place_values_u64();
  if (d.size() > q.size()) throw std::out_of_range("word too long for 64-bit decoding");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += static_cast<std::uint64_t>(d[i]) * q[i];
  return sum;
}

std::string format_word(const OstrowskiWord& w, const OstrowskiBase& base, DigitOrder order) {
  const bool compact = base.max_digit() <= 9;
  std::vector<Digit> digits = order == DigitOrder::msd ? w.msd() : w.digits;
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

OstrowskiWord parse_word(std::string_view text, DigitOrder order) {
  std::vector<Digit> digits;
  if (!text.empty() && text != "ε") {
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view part = text.substr(start, end - start);
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          throw ParseError("bad digit '" + std::string(part) + "' in word '" + std::string(text) + "'");
        }
        digits.push_back(static_cast<Digit>(std::stoul(std::string(part))));
        start = end + 1;
      }
    } else {
      for (const char c : text) {
        if (c < '0' || c > '9') throw ParseError("bad digit in word '" + std::string(text) + "'");
        digits.push_back(static_cast<Digit>(c - '0'));
      }
    }
  }
  if (order == DigitOrder::msd) std::reverse(digits.begin(), digits.end());
  return {std::move(digits)};
}

const OstrowskiBase& pell_base() {
  static const OstrowskiBase base(QuadraticSurd(-1, 1, 2, 1));
  return base;
}

BigInt pell(std::size_t n) {
  if (n == 0) return 0;
  return pell_base().place_value(n - 1);
}

}  // namespace walklab
