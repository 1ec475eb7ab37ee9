#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "walklab/errors.hpp"
#include "walklab/substitution.hpp"

using namespace walklab;

namespace {

oracle::Surd noble_oracle(std::int64_t m) {
  // [0; m, m, ...] = (sqrt(m^2 + 4) - m)/2
  return {-m, 1, m * m + 4, 2};
}

// Orbit of x under the rotation in doubles: letters before the first return to
// [0, 1 - m xi). Empty when some point sits within 1e-9 of a cut.
std::string float_itinerary(double x, double xi, int m) {
  const double window = 1 - m * xi;
  std::string out;
  do {
    for (const double cut : {0.5, 1 - xi}) {
      if (std::abs(x - cut) < 1e-9) return "";
    }
    out += x < 0.5 ? 'a' : (x < 1 - xi ? 'b' : 'c');
    x += xi;
    x -= std::floor(x);
  } while (x >= window);
  return out;
}

}  // namespace

TEST_CASE("noble substitutions") {
  const Substitution s2 = noble_substitution(2);
  CHECK(s2.image('a') == "aacac");
  CHECK(s2.image('b') == "abcac");
  CHECK(s2.image('c') == "abcacac");
  CHECK(s2.code(s2.image('a')) == "11010");
  CHECK(noble_substitution(4).image('c').size() == 21);
  for (std::uint32_t m = 2; m <= 10; m += 2) {
    const Substitution s = noble_substitution(m);
    CHECK(s.image('a').size() == m * m + 1);
    CHECK(s.image('b').size() == m * m + 1);
    CHECK(s.image('c').size() == m * m + m + 1);
  }
  CHECK_THROWS_AS(noble_substitution(3), OddM);
  CHECK_THROWS_AS(noble_substitution(0), OddM);
  CHECK_THROWS_AS(s2.image('d'), std::invalid_argument);
}

TEST_CASE("golden substitution") {
  const Substitution g = golden_substitution();
  CHECK(g.image('a') == "acacbacaccacb");
  CHECK(g.image('b') == "acacbacaccacbacaccacb");
  CHECK(g.image('c') == "acaccacaccacbacaccacb");
  CHECK(running_sum_extrema(g.image('c'), g).min == -2);
  CHECK(running_sum_extrema(g.image('a'), g).min >= 0);
  CHECK(running_sum_extrema(g.image('b'), g).min >= 0);
}

TEST_CASE("running sums of the noble images") {
  const Substitution s2 = noble_substitution(2);
  const RunningSum a = running_sum_extrema(s2.image('a'), s2);
  CHECK(a.min == 1);
  CHECK(a.max == 2);
  CHECK(a.final == 1);
  for (std::uint32_t m = 2; m <= 10; m += 2) {
    const Substitution s = noble_substitution(m);
    CHECK(running_sum_extrema(s.image('a'), s).min >= 1);
    CHECK(running_sum_extrema(s.image('b'), s).min >= -1);
    CHECK(running_sum_extrema(s.image('c'), s).min >= -1);
  }
  const RunningSum empty = running_sum_extrema("", s2);
  CHECK(empty.min == 0);
  CHECK(empty.max == 0);
}

TEST_CASE("coded fixed points equal the rotation indicator") {
  for (const std::uint32_t m : {2u, 4u, 6u}) {
    const Substitution s = noble_substitution(m);
    const std::string word = fixed_point(s, 'a', 10'000);
    CHECK(s.code(word) == oracle::half_indicator(noble_oracle(m), 10'000));
  }
  CHECK(noble_substitution(2).code(fixed_point(noble_substitution(2), 'a', 5)) == "11010");
}

TEST_CASE("fixed point stream is consistent") {
  const Substitution s = noble_substitution(4);
  const std::string long_prefix = fixed_point(s, 'a', 5000);
  CHECK(fixed_point(s, 'a', 1234) == long_prefix.substr(0, 1234));
  const std::string image = s.apply(long_prefix.substr(0, 200));
  CHECK(long_prefix.compare(0, image.size(), image) == 0);
  FixedPointStream stream(s, 'a');
  for (std::size_t i = 0; i < long_prefix.size(); ++i) REQUIRE(stream.next() == long_prefix[i]);
  CHECK_THROWS_AS(FixedPointStream(s, 'b'), NotProlongable);
  CHECK_THROWS_AS(fixed_point(golden_substitution(), 'c', 3), NotProlongable);
  CHECK(fixed_point(golden_substitution(), 'a', 13) == "acacbacaccacb");
}

TEST_CASE("return map examples") {
  const std::vector<ReturnMapReport> r0 = return_map_empirical(2, {Number(Rational(0))});
  CHECK(r0[0].return_time == 5);
  CHECK(r0[0].itinerary == "aacac");
  CHECK(r0[0].label == 'a');

  // A point in c' returns after m^2 + m + 1 steps.
  const QuadraticSurd xi = adjusted_noble_mean(2);
  const Number window = Rational(1) - Rational(2) * Number(xi);
  const Number near_end = window - Rational(1, 1000);
  const std::vector<ReturnMapReport> rc = return_map_empirical(2, {near_end});
  CHECK(rc[0].label == 'c');
  CHECK(rc[0].return_time == 7);
  CHECK(rc[0].itinerary_ok);
  CHECK(rc[0].formula_ok);
}

TEST_CASE("return map on exact sample points") {
  for (const std::uint32_t m : {2u, 4u}) {
    const std::vector<Number> starts = return_map_samples(m, 100);
    REQUIRE(starts.size() == 100);
    const std::vector<ReturnMapReport> reports = return_map_empirical(m, starts);
    const double xi = adjusted_noble_mean(m).approx();
    const Substitution s = noble_substitution(m);
    for (const ReturnMapReport& r : reports) {
      CHECK(r.formula_ok);
      CHECK(r.itinerary_ok);
      CHECK(r.itinerary == s.image(r.label));
      CHECK(r.return_time == r.itinerary.size());
      const std::string expected = float_itinerary(approx(r.start), xi, static_cast<int>(m));
      if (!expected.empty()) CHECK(r.itinerary == expected);
    }
  }
  CHECK_THROWS_AS(return_map_empirical(3, {Number(Rational(0))}), OddM);
  CHECK_THROWS_AS(return_map_empirical(2, {Number(Rational(9, 10))}), std::invalid_argument);
}
