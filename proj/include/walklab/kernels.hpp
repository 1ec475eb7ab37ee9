#pragma once

// Data-parallel inner loops of the walk engine.
//
// Each kernel comes in three flavors:
//   reference  exact big-integer floors, one index at a time; kept for tests
//   serial     certified fixed-point floors, single thread
//   parallel   the serial kernel split across OpenMP threads
// All three write identical output for identical input.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include <omp.h>

#include "walklab/qarith.hpp"

namespace walklab::kernels {

namespace reference {

// out[i] = (-1)^floor((first + i) * theta)
void step_signs(const QuadraticSurd& theta, std::uint64_t first, std::span<std::int8_t> out);

// out[i] = 1 if {(first + i) * xi} < h/k else 0
void interval_indicator(const QuadraticSurd& xi, std::uint64_t h, std::uint64_t k, std::uint64_t first,
                        std::span<std::uint8_t> out);

void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out);

}  // namespace reference

namespace serial {

void step_signs(const ScaledFloor& theta, std::uint64_t first, std::span<std::int8_t> out);
void interval_indicator(const ScaledFloor& xi, const ScaledFloor& k_xi, std::uint64_t h, std::uint64_t k,
                        std::uint64_t first, std::span<std::uint8_t> out);
// out[i] = steps[0] + ... + steps[i]
void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out);

}  // namespace serial

namespace parallel {

void step_signs(const ScaledFloor& theta, std::uint64_t first, std::span<std::int8_t> out);
void interval_indicator(const ScaledFloor& xi, const ScaledFloor& k_xi, std::uint64_t h, std::uint64_t k,
                        std::uint64_t first, std::span<std::uint8_t> out);
// Two-pass blocked scan.
void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out);

// Smallest i in [0, count) with bad(i), or nullopt.
template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, Pred&& bad) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    if (u < best && bad(u)) best = u;
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

}  // namespace parallel

namespace serial {

template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, Pred&& bad) {
  for (std::uint64_t i = 0; i < count; ++i) {
    if (bad(i)) return i;
  }
  return std::nullopt;
}

}  // namespace serial

}  // namespace walklab::kernels
