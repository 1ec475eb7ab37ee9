#include "walklab/kernels.hpp"

#include <vector>

namespace walklab::kernels {

namespace {

inline std::uint8_t in_interval(const ScaledFloor& xi, const ScaledFloor& k_xi, std::uint64_t h,
                                std::uint64_t k, std::uint64_t j) {
  // floor(k * {j xi}) = floor(j k xi) - k floor(j xi), and {j xi} < h/k iff it is < h.
  const std::int64_t scaled = k_xi.floor_int(j) - static_cast<std::int64_t>(k) * xi.floor_int(j);
  return scaled < static_cast<std::int64_t>(h) ? 1 : 0;
}

}  // namespace

namespace reference {

void step_signs(const QuadraticSurd& theta, std::uint64_t first, std::span<std::int8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const BigInt f = floor_scaled(BigInt(first + i), theta);
    out[i] = (f % 2 == 0) ? 1 : -1;
  }
}

void interval_indicator(const QuadraticSurd& xi, std::uint64_t h, std::uint64_t k, std::uint64_t first,
                        std::span<std::uint8_t> out) {
  const QuadraticSurd k_xi(xi.a() * k, xi.b() * k, xi.d(), xi.c());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const BigInt j = first + i;
    const BigInt scaled = floor_scaled(j, k_xi) - BigInt(k) * floor_scaled(j, xi);
    out[i] = scaled < h ? 1 : 0;
  }
}

void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    s += steps[i];
    out[i] = static_cast<std::int32_t>(s);
  }
}

}  // namespace reference

namespace serial {

void step_signs(const ScaledFloor& theta, std::uint64_t first, std::span<std::int8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::int8_t>(theta.step(first + i));
  }
}

void interval_indicator(const ScaledFloor& xi, const ScaledFloor& k_xi, std::uint64_t h, std::uint64_t k,
                        std::uint64_t first, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = in_interval(xi, k_xi, h, k, first + i);
}

void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out) {
  std::int32_t s = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    s += steps[i];
    out[i] = s;
  }
}

}  // namespace serial

namespace parallel {

void step_signs(const ScaledFloor& theta, std::uint64_t first, std::span<std::int8_t> out) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(theta.step(first + static_cast<std::uint64_t>(i)));
  }
}

void interval_indicator(const ScaledFloor& xi, const ScaledFloor& k_xi, std::uint64_t h, std::uint64_t k,
                        std::uint64_t first, std::span<std::uint8_t> out) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = in_interval(xi, k_xi, h, k, first + static_cast<std::uint64_t>(i));
  }
}

void prefix_sums(std::span<const std::int8_t> steps, std::span<std::int32_t> out) {
  const std::size_t n = steps.size();
  std::vector<std::int32_t> block_total(static_cast<std::size_t>(omp_get_max_threads()) + 1, 0);
#pragma omp parallel
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t lo = n * t / nt;
    const std::size_t hi = n * (t + 1) / nt;
    std::int32_t s = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      s += steps[i];
      out[i] = s;
    }
    block_total[t + 1] = s;
#pragma omp barrier
#pragma omp single
    for (std::size_t b = 1; b <= nt; ++b) block_total[b] += block_total[b - 1];
    const std::int32_t offset = block_total[t];
    if (offset != 0) {
      for (std::size_t i = lo; i < hi; ++i) out[i] += offset;
    }
  }
}

}  // namespace parallel

}  // namespace walklab::kernels
