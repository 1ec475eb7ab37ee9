#pragma once

// Exact arithmetic on real quadratic irrationals (a + b*sqrt(d))/c.
//
// Every quantity here is computed with arbitrary precision integers. The only
// approximate code path is the fixed-point fast path inside ScaledFloor, and it
// is certified: it answers only when the error bound excludes an integer and
// defers to the exact integer square root otherwise.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "walklab/bigint.hpp"
#include "walklab/errors.hpp"

namespace walklab {

class QuadraticSurd {
 public:
  // Normalizes: square factors of d move into b, gcd(a, b, c) = 1, c > 0.
  // Throws NotIrrational when the value is rational (b = 0 or d a square).
  QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c = 1);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& d() const { return d_; }
  const BigInt& c() const { return c_; }

  int sign() const;
  double approx() const;
  QuadraticSurd conjugate() const;
  // "(a+b*sqrt(d))/c", the CLI literal syntax.
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  BigInt a_, b_, d_, c_;
};

// A value of Q(sqrt d): rational results collapse to Rational.
using Number = std::variant<Rational, QuadraticSurd>;

Number add(const Number& x, const Number& y);
Number sub(const Number& x, const Number& y);
Number mul(const Number& x, const Number& y);
Number div(const Number& x, const Number& y);

inline Number operator+(const Number& x, const Number& y) { return add(x, y); }
inline Number operator-(const Number& x, const Number& y) { return sub(x, y); }
inline Number operator*(const Number& x, const Number& y) { return mul(x, y); }
inline Number operator/(const Number& x, const Number& y) { return div(x, y); }

int sign(const Number& x);
// -1, 0, +1. Throws MixedRadicand for surds over different radicands.
int compare(const Number& x, const Number& y);
BigInt floor(const Number& x);
// x - floor(x), in [0, 1).
Number frac(const Number& x);
double approx(const Number& x);
std::string to_string(const Number& x);
const QuadraticSurd& as_surd(const Number& x);  // throws NotIrrational

// Exact floor(j * xi). Uses isqrt(j^2 b^2 d), never floating point.
BigInt floor_scaled(const BigInt& j, const QuadraticSurd& xi);

// floor(j * theta) for a fixed theta and many machine-sized j.
//
// theta is split as t0 + f with t0 = floor(theta) and F = floor(f * 2^64).
// Then j*f*2^64 lies in [j*F, j*F + j), so the high word of j*F is floor(j*f)
// unless the low word is within j of the next multiple of 2^64. That case goes
// to the exact path.
class ScaledFloor {
 public:
  explicit ScaledFloor(const QuadraticSurd& theta);

  const QuadraticSurd& theta() const { return theta_; }

  // Exact floor(j * theta) for every j.
  BigInt operator()(std::uint64_t j) const;
  BigInt exact(std::uint64_t j) const { return floor_scaled(BigInt(j), theta_); }

  // floor(j * f) from the fixed-point accumulator, or nullopt when ambiguous.
  std::optional<std::uint64_t> fractional_floor(std::uint64_t j) const {
    if (j == 0) return 0;
    const unsigned __int128 x = static_cast<unsigned __int128>(j) * frac_fixed_;
    const auto lo = static_cast<std::uint64_t>(x);
    if (lo > (std::numeric_limits<std::uint64_t>::max() - j) + 1) return std::nullopt;
    return static_cast<std::uint64_t>(x >> 64);
  }

  // floor(j * theta) when it fits in 64 bits and the fast path is certain.
  std::optional<std::int64_t> floor_i64(std::uint64_t j) const {
    const auto ff = fractional_floor(j);
    if (!ff || !int_fits_) return std::nullopt;
    const __int128 v = static_cast<__int128>(int_part_i64_) * static_cast<__int128>(j) +
                       static_cast<__int128>(*ff);
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(v);
  }

  // floor(j * theta) as int64, deferring to the exact path when needed.
  // Throws std::overflow_error if the value does not fit.
  std::int64_t floor_int(std::uint64_t j) const {
    if (auto v = floor_i64(j)) return *v;
    return floor_int_slow(j);
  }

  // floor(j * theta) mod 2.
  int parity(std::uint64_t j) const {
    if (auto ff = fractional_floor(j)) {
      return static_cast<int>(((j & int_odd_) ^ *ff) & 1u);
    }
    return parity_slow(j);
  }

  // (-1)^floor(j * theta)
  int step(std::uint64_t j) const { return 1 - 2 * parity(j); }

  // Count of fixed-point answers that were deferred to the exact path.
  static std::uint64_t fallback_count();

 private:
  int parity_slow(std::uint64_t j) const;
  std::int64_t floor_int_slow(std::uint64_t j) const;

  QuadraticSurd theta_;
  BigInt int_part_;
  std::int64_t int_part_i64_ = 0;
  bool int_fits_ = false;
  std::uint64_t int_odd_ = 0;
  std::uint64_t frac_fixed_ = 0;
};

class ContinuedFraction {
 public:
  // a_0..a_{k-1} then the repeating block. Requires a_i >= 1 for i >= 1 and a
  // nonempty period.
  ContinuedFraction(std::vector<BigInt> preperiod, std::vector<BigInt> period);

  const std::vector<BigInt>& preperiod() const { return preperiod_; }
  const std::vector<BigInt>& period() const { return period_; }

  // a_i
  const BigInt& partial_quotient(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  // Largest partial quotient over indices >= 1.
  BigInt max_tail_quotient() const;

  std::string to_string() const;  // "[0; 1, (6, 2)]"

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<BigInt> preperiod_;
  std::vector<BigInt> period_;
};

struct Convergent {
  BigInt p;
  BigInt q;
};

// Exact expansion through the reduced (P + sqrt D)/Q state recurrence; the
// first repeated (P, Q) state closes the period.
ContinuedFraction cf_expand(const QuadraticSurd& xi);

// p_0/q_0 .. p_n/q_n.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n);

// Denominators q_0, q_1, ... while q_i <= limit, plus the first one above it.
std::vector<BigInt> denominators_through(const ContinuedFraction& cf, const BigInt& limit);

// Odd-indexed partial quotients all even (equivalently q_{2n+1} all even).
bool is_br(const ContinuedFraction& cf);

// Parses "(a+b*sqrt(d))/c", "(a-b*sqrt(d))", or a named shorthand:
// sqrt2, 2sqrt2, sqrt3, silver, golden, sqrt3over2, sqrt2m1, halfsqrt2m1,
// noble<m> (the adjusted noble mean [0; m, m, ...]).
QuadraticSurd parse_surd(std::string_view text);

// (sqrt(m^2 + 4) - m) / 2 = [0; m, m, m, ...]
QuadraticSurd adjusted_noble_mean(std::uint32_t m);

}  // namespace walklab
