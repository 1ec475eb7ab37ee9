#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's floor or walk code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using u128 = unsigned __int128;
using i128 = __int128;

// Floating-point first guess, then exact integer correction.
inline u128 isqrt128(u128 n) {
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline i128 floor_div(i128 a, i128 c) {
  i128 q = a / c;
  if ((a % c != 0) && ((a < 0) != (c < 0))) --q;
  return q;
}

// floor(j (a + b sqrt(d)) / c) for d not a square, c > 0, and b^2 d j^2 well
// below 2^120.
struct Surd {
  std::int64_t a, b, d, c;

  std::int64_t floor_mul(std::uint64_t j) const {
    const i128 t = static_cast<i128>(b) * static_cast<i128>(j);
    const i128 aj = static_cast<i128>(a) * static_cast<i128>(j);
    const u128 mag = static_cast<u128>(t < 0 ? -t : t);
    const i128 r = static_cast<i128>(isqrt128(mag * mag * static_cast<u128>(d)));
    const i128 num = t >= 0 ? aj + r : aj - r - 1;
    return static_cast<std::int64_t>(floor_div(num, c));
  }
};

inline const Surd two_sqrt2{0, 2, 2, 1};
inline const Surd sqrt2{0, 1, 2, 1};
inline const Surd sqrt3{0, 1, 3, 1};

// Steps (-1)^floor(j theta) for j = 1..n.
inline std::vector<int> steps(const Surd& theta, std::uint64_t n) {
  std::vector<int> out(n);
  for (std::uint64_t j = 1; j <= n; ++j) out[j - 1] = (theta.floor_mul(j) % 2 == 0) ? 1 : -1;
  return out;
}

// S_0..S_n.
inline std::vector<std::int64_t> sums(const Surd& theta, std::uint64_t n) {
  std::vector<std::int64_t> s(n + 1, 0);
  const std::vector<int> st = steps(theta, n);
  for (std::uint64_t j = 1; j <= n; ++j) s[j] = s[j - 1] + st[j - 1];
  return s;
}

// Indices where a value is first attained, 0 included.
inline std::vector<std::uint64_t> records(const std::vector<std::int64_t>& s) {
  std::vector<std::uint64_t> out{0};
  std::int64_t lo = 0, hi = 0;
  for (std::size_t n = 1; n < s.size(); ++n) {
    if (s[n] > hi || s[n] < lo) {
      out.push_back(n);
      lo = std::min(lo, s[n]);
      hi = std::max(hi, s[n]);
    }
  }
  return out;
}

inline std::vector<std::uint64_t> zeros(const std::vector<std::int64_t>& s) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (s[n] == 0) out.push_back(n);
  }
  return out;
}

// {n xi} < 1/2 for n = 0..count-1, xi = (a + b sqrt d)/c in (0, 1).
inline std::string half_indicator(const Surd& xi, std::size_t count) {
  const Surd twice{2 * xi.a, 2 * xi.b, xi.d, xi.c};
  std::string out;
  for (std::uint64_t n = 0; n < count; ++n) {
    out += twice.floor_mul(n) - 2 * xi.floor_mul(n) == 0 ? '1' : '0';
  }
  return out;
}

// Pell numbers P_0 = 0, P_1 = 1.
inline std::vector<std::uint64_t> pell(std::size_t count) {
  std::vector<std::uint64_t> p{0, 1};
  while (p.size() < count) p.push_back(2 * p[p.size() - 1] + p[p.size() - 2]);
  p.resize(count);
  return p;
}

// Second column of a b-file.
inline std::vector<std::string> bfile_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string index, value;
  while (in >> index >> value) out.push_back(value);
  return out;
}

inline std::string fixture(const std::string& name) { return std::string(WALKLAB_FIXTURES) + "/" + name; }

}  // namespace oracle
