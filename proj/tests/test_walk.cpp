#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "walklab/errors.hpp"
#include "walklab/walk.hpp"

using namespace walklab;

namespace {

const WalkSpec& two_sqrt2() {
  static const WalkSpec spec = WalkSpec::from_theta(parse_surd("2sqrt2"));
  return spec;
}

std::vector<std::uint64_t> oracle_ab(const std::vector<int>& steps, int sign) {
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == sign) out.push_back(j + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("rotation of a few angles") {
  CHECK(two_sqrt2().rotation == parse_surd("sqrt2m1"));
  CHECK(two_sqrt2().br);
  CHECK(WalkSpec::from_theta(parse_surd("sqrt2")).rotation == QuadraticSurd(0, 1, 2, 2));
  CHECK(WalkSpec::from_theta(parse_surd("sqrt2m1")).rotation == parse_surd("halfsqrt2m1"));
  CHECK_FALSE(WalkSpec::from_theta(parse_surd("sqrt3")).br);
  CHECK(WalkSpec::from_rotation(parse_surd("sqrt2m1")).theta == parse_surd("(-2+2*sqrt(2))"));
}

TEST_CASE("brute walk matches the oracle for every engine") {
  for (const auto& [name, surd] : {std::pair{"2sqrt2", oracle::two_sqrt2}, std::pair{"sqrt2", oracle::sqrt2},
                                   std::pair{"sqrt3", oracle::sqrt3}}) {
    const WalkSpec spec = WalkSpec::from_theta(parse_surd(name));
    const std::vector<std::int64_t> expected = oracle::sums(surd, 100'000);
    for (const Engine e : {Engine::serial, Engine::parallel}) {
      const WalkTrace t = brute_walk(spec, 100'000, e, true);
      REQUIRE(t.length() == 100'000);
      CHECK(std::equal(t.sums.begin(), t.sums.end(), expected.begin()));
      for (std::size_t j = 1; j <= 100'000; ++j) REQUIRE(t.signs[j - 1] == t[j] - t[j - 1]);
    }
    const WalkTrace r = brute_walk(spec, 3000, Engine::reference);
    CHECK(std::equal(r.sums.begin(), r.sums.end(), expected.begin()));
  }
}

TEST_CASE("walk examples") {
  const WalkTrace t = brute_walk(two_sqrt2(), 200);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[69] == 1);
  CHECK(t[70] == 0);
}

TEST_CASE("records and zeros") {
  CHECK(records(WalkSpec::from_theta(parse_surd("sqrt2")), 30).indices == std::vector<std::uint64_t>{0, 1, 3, 8, 20});
  const Records r = records(two_sqrt2(), 1000);
  CHECK(r.indices == std::vector<std::uint64_t>{0, 1, 6, 35, 204});
  CHECK(r.values == std::vector<std::int64_t>{0, 1, 2, 3, 4});

  const Records s3 = records(WalkSpec::from_theta(parse_surd("sqrt3")), 4000);
  const std::vector<std::uint64_t> printed{1, 2, 3, 7, 18, 33, 48, 104, 257, 466, 675, 1455, 3586};
  CHECK(std::vector<std::uint64_t>(s3.indices.begin() + 1, s3.indices.end()) == printed);

  const std::vector<std::uint64_t> z = zeros(two_sqrt2(), 86);
  CHECK(z == std::vector<std::uint64_t>{0, 2, 4, 12, 14, 16, 24, 26, 28, 70, 72, 74, 82, 84, 86});

  for (const auto& surd : {oracle::two_sqrt2, oracle::sqrt2, oracle::sqrt3}) {
    const std::vector<std::int64_t> s = oracle::sums(surd, 200'000);
    const WalkTrace t = brute_walk(WalkSpec::from_theta(QuadraticSurd(surd.a, surd.b, surd.d, surd.c)), 200'000);
    CHECK(records(t).indices == oracle::records(s));
    CHECK(zeros(t) == oracle::zeros(s));
  }
}

TEST_CASE("no zeros between an odd denominator and the next one") {
  const WalkTrace t = brute_walk(two_sqrt2(), 100'000);
  const std::vector<std::uint64_t> z = zeros(t);
  const std::vector<std::uint64_t> p = oracle::pell(20);
  for (std::size_t i = 1; i + 1 < p.size() && p[i + 1] <= 100'000; ++i) {
    if (p[i] % 2 == 0) continue;
    for (const std::uint64_t n : z) CHECK_FALSE((n >= p[i] && n < p[i + 1]));
  }
}

TEST_CASE("a and b partition the indices") {
  const std::vector<int> steps = oracle::steps(oracle::two_sqrt2, 50'000);
  const AbSequences ab = ab_sequences(two_sqrt2(), 50'000);
  CHECK(ab.a == oracle_ab(steps, 1));
  CHECK(ab.b == oracle_ab(steps, -1));
  CHECK(ab.a.size() + ab.b.size() == 50'000);
  const std::vector<std::uint64_t> a18(ab.a.begin(), ab.a.begin() + 18), b18(ab.b.begin(), ab.b.begin() + 18);
  CHECK(a18 == std::vector<std::uint64_t>{1, 3, 5, 6, 8, 10, 13, 15, 17, 18, 20, 22, 25, 27, 29, 30, 32, 34});
  CHECK(b18 == std::vector<std::uint64_t>{2, 4, 7, 9, 11, 12, 14, 16, 19, 21, 23, 24, 26, 28, 31, 33, 36, 38});
}

TEST_CASE("difference sequence and its hits") {
  const std::vector<std::int64_t> d = diff_sequence(two_sqrt2(), 10'000);
  const std::vector<int> steps = oracle::steps(oracle::two_sqrt2, 40'000);
  const std::vector<std::uint64_t> a = oracle_ab(steps, 1), b = oracle_ab(steps, -1);
  for (std::size_t n = 0; n < d.size(); ++n) {
    REQUIRE(d[n] == static_cast<std::int64_t>(b[n]) - static_cast<std::int64_t>(a[n]));
  }
  const auto contains = [](const std::vector<std::uint64_t>& v, std::uint64_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  CHECK(contains(diff_hits(two_sqrt2(), 1, 100), 1));
  CHECK(contains(diff_hits(two_sqrt2(), 2, 100), 3));
  CHECK(contains(diff_hits(two_sqrt2(), 3, 100), 4));
  for (std::int64_t k = 1; k <= 6; ++k) {
    std::vector<std::uint64_t> expected;
    for (std::size_t n = 0; n < d.size(); ++n) {
      if (d[n] == k) expected.push_back(n + 1);
    }
    CHECK(diff_hits(two_sqrt2(), k, d.size()) == expected);
  }
}

TEST_CASE("rules engine agrees with brute force") {
  std::mt19937_64 rng(2024);
  for (const char* xi : {"(-1+1*sqrt(2))", "(-1+1*sqrt(2))/2", "(-2+1*sqrt(6))", "(6+1*sqrt(2))/17"}) {
    const WalkSpec spec = WalkSpec::from_rotation(parse_surd(xi));
    REQUIRE(spec.br);
    const RulesEngine engine(spec);
    const WalkTrace t = brute_walk(spec, 1'000'000);
    for (std::uint64_t n = 0; n <= 100'000; ++n) REQUIRE(engine(n) == t[n]);
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t n = rng() % 1'000'001;
      REQUIRE(engine(n) == t[n]);
    }
    for (const std::uint64_t q : engine.denominators()) {
      if (q <= engine.max_index()) CHECK(engine(q) == static_cast<std::int64_t>(q % 2));
    }
  }
  CHECK(fast_s(two_sqrt2(), 70) == 0);
  CHECK(fast_s(two_sqrt2(), 169) == 1);
  CHECK_THROWS_AS(RulesEngine(WalkSpec::from_theta(parse_surd("sqrt3"))), NotBrNumber);
}

TEST_CASE("a(j) and b(j) from the rules engine") {
  const RulesEngine engine(two_sqrt2());
  const std::vector<int> steps = oracle::steps(oracle::two_sqrt2, 100'000);
  const std::vector<std::uint64_t> a = oracle_ab(steps, 1), b = oracle_ab(steps, -1);
  for (std::uint64_t j = 1; j <= 40'000; j += 7) {
    REQUIRE(plus_index(engine, j) == a[j - 1]);
    REQUIRE(minus_index(engine, j) == b[j - 1]);
  }
}

TEST_CASE("witnesses for each difference are genuine") {
  const RulesEngine engine(two_sqrt2());
  for (std::int64_t k = 1; k <= 20; ++k) {
    const std::vector<std::uint64_t> w = kimberling_witnesses(k, 3);
    REQUIRE(w.size() == 3);
    for (const std::uint64_t j : w) {
      CHECK(static_cast<std::int64_t>(minus_index(engine, j) - plus_index(engine, j)) == k);
    }
  }
}

TEST_CASE("lemma identities") {
  const LemmaReport r = lemma_checks(two_sqrt2(), 8);
  CHECK(r.denominators.size() == 8);
  CHECK(r.denominators.front() == 2);
  CHECK(r.denominators[1] == 12);
  CHECK(r.reflection_checks > 0);
  CHECK(r.shift_checks > 0);
  CHECK(r.surplus_checks > 0);
  CHECK_THROWS_AS(lemma_checks(WalkSpec::from_theta(parse_surd("sqrt2")), 3), std::invalid_argument);
}

TEST_CASE("discrepancy of the half interval") {
  const QuadraticSurd xi = parse_surd("sqrt2m1");
  const std::vector<std::int64_t> d = discrepancy(xi, 1, 2, 10'000);
  REQUIRE(d.size() == 10'001);
  CHECK(d[0] == 0);
  CHECK(d[2] == 0);
  CHECK(*std::min_element(d.begin(), d.end()) >= 0);
  // 2 D_n from the oracle indicator.
  const std::string ind = oracle::half_indicator({-1, 1, 2, 1}, 10'001);
  std::int64_t twice = 0;
  for (std::size_t n = 1; n <= 10'000; ++n) {
    twice += ind[n] == '1' ? 1 : -1;
    REQUIRE(d[n] == twice);
  }
  CHECK(discrepancy(xi, 1, 3, 100, Engine::reference) == discrepancy(xi, 1, 3, 100, Engine::serial));
  CHECK_THROWS_AS(discrepancy(xi, 2, 2, 10), std::invalid_argument);
}

TEST_CASE("nonnegativity for BR rotations") {
  for (const char* xi : {"(-1+1*sqrt(2))", "(-1+1*sqrt(2))/2", "(-2+1*sqrt(5))", "(-2+1*sqrt(6))"}) {
    const WalkTrace t = brute_walk(WalkSpec::from_rotation(parse_surd(xi)), 200'000);
    CHECK(*std::min_element(t.sums.begin(), t.sums.end()) >= 0);
  }
}
