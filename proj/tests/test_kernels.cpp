#include <doctest.h>
#include <omp.h>

#include <random>

#include "oracle.hpp"
#include "walklab/kernels.hpp"

using namespace walklab;

TEST_CASE("step kernels agree across engines and thread counts") {
  for (const char* name : {"2sqrt2", "sqrt2", "sqrt3", "(-1+1*sqrt(2))", "(6+1*sqrt(2))/17", "(5-3*sqrt(7))/4"}) {
    const QuadraticSurd theta = parse_surd(name);
    const ScaledFloor f(theta);
    const std::size_t n = 20'000;
    for (const std::uint64_t first : {std::uint64_t{1}, std::uint64_t{1} << 33}) {
      std::vector<std::int8_t> ref(n), ser(n);
      kernels::reference::step_signs(theta, first, ref);
      kernels::serial::step_signs(f, first, ser);
      CHECK(ref == ser);
      for (const int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        std::vector<std::int8_t> par(n);
        kernels::parallel::step_signs(f, first, par);
        CHECK(par == ser);
      }
    }
  }
}

TEST_CASE("step kernels against the integer oracle") {
  const std::vector<int> expected = oracle::steps(oracle::two_sqrt2, 1'000'000);
  std::vector<std::int8_t> got(expected.size());
  kernels::parallel::step_signs(ScaledFloor(parse_surd("2sqrt2")), 1, got);
  CHECK(std::equal(got.begin(), got.end(), expected.begin()));
}

TEST_CASE("interval indicator kernels agree") {
  const QuadraticSurd xi = parse_surd("(-1+1*sqrt(2))");
  for (const auto& [h, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 5}, std::pair{7, 9}}) {
    const QuadraticSurd kxi(xi.a() * k, xi.b() * k, xi.d(), xi.c());
    const ScaledFloor f(xi), fk(kxi);
    const std::size_t n = 5'000;
    std::vector<std::uint8_t> ref(n), ser(n), par(n);
    kernels::reference::interval_indicator(xi, h, k, 1, ref);
    kernels::serial::interval_indicator(f, fk, h, k, 1, ser);
    omp_set_num_threads(3);
    kernels::parallel::interval_indicator(f, fk, h, k, 1, par);
    CHECK(ref == ser);
    CHECK(par == ser);
    // {j xi} < h/k from the oracle floors: k j xi - k floor(j xi) < h
    const oracle::Surd o{-1, 1, 2, 1}, ok{-k, k, 2, 1};
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t j = i + 1;
      REQUIRE(ser[i] == (ok.floor_mul(j) - k * o.floor_mul(j) < h ? 1 : 0));
    }
  }
}

TEST_CASE("prefix sums agree for awkward lengths") {
  std::mt19937 rng(7);
  for (const std::size_t n : {0, 1, 2, 3, 7, 64, 1001, 100'003}) {
    std::vector<std::int8_t> steps(n);
    for (auto& s : steps) s = rng() & 1 ? 1 : -1;
    std::vector<std::int32_t> ref(n), ser(n);
    kernels::reference::prefix_sums(steps, ref);
    kernels::serial::prefix_sums(steps, ser);
    CHECK(ref == ser);
    for (const int threads : {1, 2, 5, 16}) {
      omp_set_num_threads(threads);
      std::vector<std::int32_t> par(n);
      kernels::parallel::prefix_sums(steps, par);
      CHECK(par == ser);
    }
  }
}

TEST_CASE("first_index finds the smallest witness") {
  for (const int threads : {1, 4}) {
    omp_set_num_threads(threads);
    const auto bad = [](std::uint64_t i) { return i >= 777 && i % 5 == 2; };
    CHECK(kernels::parallel::first_index(100'000, bad) == std::optional<std::uint64_t>{777});
    CHECK(kernels::serial::first_index(100'000, bad) == std::optional<std::uint64_t>{777});
    CHECK_FALSE(kernels::parallel::first_index(700, bad).has_value());
  }
}
