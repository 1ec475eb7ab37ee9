#include <doctest.h>
#include <mpfr.h>

#include "oracle.hpp"
#include "walklab/errors.hpp"
#include "walklab/qarith.hpp"

using namespace walklab;

namespace {

// floor(j * (a + b sqrt d)/c) from a 256-bit interval; nullopt when the
// interval straddles an integer.
std::optional<long> interval_floor(long j, long a, long b, long d, long c) {
  mpfr_t lo, hi;
  mpfr_inits2(256, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(lo, d, MPFR_RNDN);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_set_si(hi, d, MPFR_RNDN);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  if (b < 0) mpfr_swap(lo, hi);
  for (mpfr_ptr x : {static_cast<mpfr_ptr>(lo), static_cast<mpfr_ptr>(hi)}) {
    const mpfr_rnd_t r = x == lo ? MPFR_RNDD : MPFR_RNDU;
    mpfr_mul_si(x, x, b, r);
    mpfr_add_si(x, x, a, r);
    mpfr_mul_si(x, x, j, r);
    mpfr_div_si(x, x, c, r);
    mpfr_floor(x, x);
  }
  std::optional<long> out;
  if (mpfr_equal_p(lo, hi)) out = mpfr_get_si(lo, MPFR_RNDN);
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST_CASE("normalization and radicand collapse") {
  const QuadraticSurd s2(0, 1, 2);
  const Number sq = mul(s2, s2);
  REQUIRE(std::holds_alternative<Rational>(sq));
  CHECK(std::get<Rational>(sq) == 2);

  CHECK(QuadraticSurd(2, 2, 2, 2) == QuadraticSurd(1, 1, 2, 1));
  CHECK(QuadraticSurd(-2, 2, 2, 2) == QuadraticSurd(-1, 1, 2, 1));
  CHECK(QuadraticSurd(0, 1, 8, 1) == QuadraticSurd(0, 2, 2, 1));
  CHECK(QuadraticSurd(1, 1, 2, -1) == QuadraticSurd(-1, -1, 2, 1));

  CHECK_THROWS_AS(QuadraticSurd(1, 0, 2, 1), NotIrrational);
  CHECK_THROWS_AS(QuadraticSurd(1, 3, 9, 1), NotIrrational);
  CHECK_THROWS_AS(QuadraticSurd(1, 1, 2, 0), DivisionByZero);
  CHECK_THROWS_AS(compare(QuadraticSurd(0, 1, 2), QuadraticSurd(0, 1, 3)), MixedRadicand);
  CHECK_THROWS_AS(div(Number(Rational(1)), Number(Rational(0))), DivisionByZero);
}

TEST_CASE("field arithmetic matches floating point") {
  const QuadraticSurd x(3, -2, 5, 7);
  const QuadraticSurd y(-1, 4, 5, 3);
  const double xd = x.approx(), yd = y.approx();
  CHECK(approx(add(x, y)) == doctest::Approx(xd + yd));
  CHECK(approx(sub(x, y)) == doctest::Approx(xd - yd));
  CHECK(approx(mul(x, y)) == doctest::Approx(xd * yd));
  CHECK(approx(div(x, y)) == doctest::Approx(xd / yd));
  CHECK(compare(div(mul(x, y), y), x) == 0);
  CHECK(compare(x, y) == (xd < yd ? -1 : 1));
  CHECK(floor(Number(x)) == static_cast<long>(std::floor(xd)));
  const Number f = frac(x);
  CHECK(sign(f) >= 0);
  CHECK(compare(f, Rational(1)) < 0);
}

TEST_CASE("floor_scaled examples") {
  const QuadraticSurd t = parse_surd("2sqrt2");
  CHECK(floor_scaled(1, t) == 2);
  CHECK(floor_scaled(2, t) == 5);
  CHECK(floor_scaled(69, t) == 195);
  CHECK(floor_scaled(69, t) % 2 == 1);
}

TEST_CASE("floor_scaled agrees with a 256-bit interval oracle") {
  struct Case {
    long a, b, d, c;
  };
  const Case cases[] = {{0, 2, 2, 1}, {-1, 1, 2, 1}, {0, 1, 3, 2}, {6, 1, 2, 17}, {-2, 1, 5, 1}, {5, -3, 7, 4}};
  for (const Case& k : cases) {
    const QuadraticSurd xi(k.a, k.b, k.d, k.c);
    const long stride = k.a == 0 && k.b == 2 ? 1 : 37;
    for (long j = 1; j <= 1'000'000; j += stride) {
      const auto expected = interval_floor(j, k.a, k.b, k.d, k.c);
      REQUIRE(expected.has_value());
      REQUIRE(floor_scaled(j, xi) == *expected);
    }
  }
}

TEST_CASE("floor_scaled far beyond machine range") {
  const QuadraticSurd t = parse_surd("2sqrt2");
  const BigInt j = BigInt(1) << 200;
  const BigInt f = floor_scaled(j, t);
  // f <= j * 2 sqrt 2 < f + 1  <=>  f^2 <= 8 j^2 < (f + 1)^2
  CHECK(f * f <= 8 * j * j);
  CHECK((f + 1) * (f + 1) > 8 * j * j);
}

TEST_CASE("fast path agrees with the exact floor") {
  for (const char* name : {"2sqrt2", "sqrt2", "sqrt3", "golden", "(6+1*sqrt(2))/17", "(5-3*sqrt(7))/4"}) {
    const QuadraticSurd t = parse_surd(name);
    const ScaledFloor f(t);
    for (std::uint64_t j = 0; j <= 200'000; ++j) {
      const BigInt exact = floor_scaled(j, t);
      REQUIRE(f(j) == exact);
      REQUIRE(f.parity(j) == static_cast<int>(exact & 1));
      REQUIRE(f.floor_int(j) == exact);
    }
    for (std::uint64_t j = (std::uint64_t{1} << 40); j < (std::uint64_t{1} << 40) + 2000; ++j) {
      REQUIRE(f(j) == floor_scaled(j, t));
    }
  }
}

TEST_CASE("fast path against the independent integer oracle") {
  const ScaledFloor f(parse_surd("2sqrt2"));
  for (std::uint64_t j = 1; j <= 2'000'000; ++j) REQUIRE(f.floor_int(j) == oracle::two_sqrt2.floor_mul(j));
}

TEST_CASE("continued fraction expansions") {
  const ContinuedFraction pell = cf_expand(parse_surd("sqrt2m1"));
  CHECK(pell.preperiod() == std::vector<BigInt>{0});
  CHECK(pell.period() == std::vector<BigInt>{2});

  const ContinuedFraction half = cf_expand(parse_surd("halfsqrt2m1"));
  CHECK(half.period() == std::vector<BigInt>{4, 1});

  const ContinuedFraction s32 = cf_expand(parse_surd("sqrt3over2"));
  CHECK(s32.preperiod() == std::vector<BigInt>{0, 1});
  CHECK(s32.period() == std::vector<BigInt>{6, 2});
  CHECK(s32.to_string() == "[0; 1, (6, 2)]");

  const ContinuedFraction pre = cf_expand(QuadraticSurd(6, 1, 2, 17));
  CHECK(pre.preperiod() == std::vector<BigInt>{0, 2, 3});
  CHECK(pre.period() == std::vector<BigInt>{2});

  // Every expansion reproduces its value to double precision.
  for (const char* name : {"sqrt2m1", "halfsqrt2m1", "sqrt3over2", "golden", "(5-3*sqrt(7))/4", "noble6"}) {
    const QuadraticSurd xi = parse_surd(name);
    const std::vector<Convergent> c = convergents(cf_expand(xi), 40);
    const double v = static_cast<double>(c.back().p) / static_cast<double>(c.back().q);
    CHECK(v == doctest::Approx(xi.approx()).epsilon(1e-12));
  }
}

TEST_CASE("convergent denominators") {
  auto qs = [](const char* name, std::size_t n) {
    std::vector<BigInt> out;
    for (const Convergent& c : convergents(cf_expand(parse_surd(name)), n)) out.push_back(c.q);
    return out;
  };
  CHECK(qs("sqrt2m1", 6) == std::vector<BigInt>{1, 2, 5, 12, 29, 70, 169});
  CHECK(qs("sqrt3over2", 4) == std::vector<BigInt>{1, 1, 7, 15, 97});
  CHECK(qs("(-1+1*sqrt(5))/2", 4) == std::vector<BigInt>{1, 1, 2, 3, 5});

  const std::vector<std::uint64_t> p = oracle::pell(30);
  const std::vector<BigInt> q = qs("sqrt2m1", 27);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i] == p[i + 1]);

  const std::vector<BigInt> through = denominators_through(cf_expand(parse_surd("sqrt2m1")), 70);
  CHECK(through == std::vector<BigInt>{1, 2, 5, 12, 29, 70, 169});
}

TEST_CASE("BR-numbers") {
  CHECK(is_br(cf_expand(parse_surd("sqrt2m1"))));
  CHECK(is_br(cf_expand(parse_surd("halfsqrt2m1"))));
  CHECK_FALSE(is_br(cf_expand(parse_surd("sqrt3over2"))));
  CHECK_FALSE(is_br(cf_expand(parse_surd("(-1+1*sqrt(5))/2"))));
  CHECK(is_br(cf_expand(QuadraticSurd(6, 1, 2, 17))));
  for (std::uint32_t m = 1; m <= 8; ++m) CHECK(is_br(cf_expand(adjusted_noble_mean(m))) == (m % 2 == 0));
}

TEST_CASE("surd literals") {
  CHECK(parse_surd("(2+2*sqrt(2))/2") == QuadraticSurd(1, 1, 2));
  CHECK(parse_surd(" ( -2 + 2*sqrt(2) ) / 2 ") == QuadraticSurd(-1, 1, 2));
  CHECK(parse_surd("(+3-1*sqrt(5))") == QuadraticSurd(3, -1, 5));
  CHECK(parse_surd("silver") == QuadraticSurd(1, 1, 2));
  CHECK(parse_surd("noble2") == QuadraticSurd(-1, 1, 2));
  CHECK(parse_surd(QuadraticSurd(-3, 5, 11, 4).to_string()) == QuadraticSurd(-3, 5, 11, 4));
  CHECK_THROWS_AS(parse_surd("sqrt(2)"), ParseError);
  CHECK_THROWS_AS(parse_surd("(1+2*sqrt(4))"), NotIrrational);
}
