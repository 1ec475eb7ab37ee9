#pragma once

// Deterministic random walks S_n(theta) = sum_{j<=n} (-1)^floor(j*theta).
//
// The walk depends on theta only modulo 2, so each spec also carries the
// rotation xi = {theta/2} whose continued fraction drives the recursive
// engine and the digit characterizations.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "walklab/qarith.hpp"

namespace walklab {

struct WalkSpec {
  QuadraticSurd theta;
  QuadraticSurd rotation;  // {theta / 2}
  ContinuedFraction cf;    // of rotation
  bool br = false;

  static WalkSpec from_theta(const QuadraticSurd& theta);
  // theta = 2 xi
  static WalkSpec from_rotation(const QuadraticSurd& xi);
};

enum class Engine { reference, serial, parallel };

struct WalkTrace {
  // sums[n] = S_n for 0 <= n <= N; sums[0] = 0.
  std::vector<std::int32_t> sums;
  // signs[j - 1] = step j, kept only on request.
  std::vector<std::int8_t> signs;

  std::uint64_t length() const { return sums.size() - 1; }
  std::int32_t operator[](std::size_t n) const { return sums[n]; }
};

WalkTrace brute_walk(const WalkSpec& spec, std::uint64_t n, Engine engine = Engine::parallel,
                     bool keep_signs = false);

std::vector<std::int8_t> step_signs(const WalkSpec& spec, std::uint64_t n, Engine engine = Engine::parallel);

// Rules A/B/C over the convergent denominators of a BR rotation. With
// q' < n < q consecutive denominators:
//   A: S_q = q mod 2
//   B: S_n = S_{q'} + S_{q-n-1}   when 2n >= q
//   C: S_n = S_{q'} + S_{n-q'}    when 2n <  q
class RulesEngine {
 public:
  explicit RulesEngine(const WalkSpec& spec);  // throws NotBrNumber

  std::int64_t operator()(std::uint64_t n) const;
  std::span<const std::uint64_t> denominators() const { return q_; }
  // Largest supported index.
  std::uint64_t max_index() const { return q_.back() - 1; }

 private:
  std::vector<std::uint64_t> q_;
};

std::int64_t fast_s(const WalkSpec& spec, std::uint64_t n);

// First attainment of each integer value; index 0 (value 0) included.
struct Records {
  std::vector<std::uint64_t> indices;
  std::vector<std::int64_t> values;
};

Records records(const WalkTrace& trace);
Records records(const WalkSpec& spec, std::uint64_t n);

std::vector<std::uint64_t> zeros(const WalkTrace& trace);
std::vector<std::uint64_t> zeros(const WalkSpec& spec, std::uint64_t n);

struct AbSequences {
  std::vector<std::uint64_t> a;  // indices of +1 steps
  std::vector<std::uint64_t> b;  // indices of -1 steps
};

AbSequences ab_sequences(std::span<const std::int8_t> signs);
AbSequences ab_sequences(const WalkSpec& spec, std::uint64_t n);

// b(n) - a(n) for n = 1..count (element n - 1). The walk is extended until both
// sequences reach count terms.
std::vector<std::int64_t> diff_sequence(const WalkSpec& spec, std::uint64_t count);

// All n <= bound with b(n) - a(n) = k, ascending.
std::vector<std::uint64_t> diff_hits(const WalkSpec& spec, std::int64_t k, std::uint64_t bound);

// k*D_n for n = 0..count, where D_n = #{j <= n : {j xi} in [0, h/k)} - (h/k) n.
// Requires 0 < xi < 1 and 0 < h < k.
std::vector<std::int64_t> discrepancy(const QuadraticSurd& xi, std::uint64_t h, std::uint64_t k,
                                      std::uint64_t count, Engine engine = Engine::parallel);

// a(j) and b(j) at any scale the rules engine covers: the first n with
// (n + S_n)/2 = j, respectively (n - S_n)/2 = j.
std::uint64_t plus_index(const RulesEngine& engine, std::uint64_t j);
std::uint64_t minus_index(const RulesEngine& engine, std::uint64_t j);

// Indices j with b(j) - a(j) = k for S_n(2 sqrt 2), unverified. The first comes
// from (q_{2m-1} + 2m)/4 when k = a(m) with m > 1, from (n + d)/2 with d a sum
// of n odd denominators above 2k when k = b(n), and otherwise from a direct
// search; later ones add q/2 for even denominators q >= 2j.
std::vector<std::uint64_t> kimberling_witnesses(std::int64_t k, std::size_t count);

struct LemmaReport {
  std::vector<std::uint64_t> denominators;  // the even q_{2m-1} examined
  std::uint64_t reflection_checks = 0;      // S_{q/2+k} = S_{q/2} - S_k
  std::uint64_t shift_checks = 0;           // a(q/2+j) = q + a(j), same for b
  std::uint64_t surplus_checks = 0;         // b((q+2m)/4) - a((q+2m)/4) = a(m)
};

// Checks the reflection, shift, and surplus identities of S_n(2 sqrt 2) for
// the first `depth` even denominators. Throws CheckFailed at the first
// counterexample; std::invalid_argument unless the rotation is sqrt(2) - 1.
LemmaReport lemma_checks(const WalkSpec& spec, std::size_t depth);

}  // namespace walklab
