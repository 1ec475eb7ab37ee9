#include "walklab/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "walklab/kernels.hpp"

namespace walklab {

WalkSpec WalkSpec::from_theta(const QuadraticSurd& theta) {
  const QuadraticSurd rotation = as_surd(frac(div(theta, Rational(2))));
  ContinuedFraction cf = cf_expand(rotation);
  const bool br = is_br(cf);
  return WalkSpec{theta, rotation, std::move(cf), br};
}

WalkSpec WalkSpec::from_rotation(const QuadraticSurd& xi) {
  return from_theta(as_surd(mul(xi, Rational(2))));
}

std::vector<std::int8_t> step_signs(const WalkSpec& spec, std::uint64_t n, Engine engine) {
  std::vector<std::int8_t> signs(n);
  switch (engine) {
    case Engine::reference:
      kernels::reference::step_signs(spec.theta, 1, signs);
      break;
    case Engine::serial:
      kernels::serial::step_signs(ScaledFloor(spec.theta), 1, signs);
      break;
    case Engine::parallel:
      kernels::parallel::step_signs(ScaledFloor(spec.theta), 1, signs);
      break;
  }
  return signs;
}

WalkTrace brute_walk(const WalkSpec& spec, std::uint64_t n, Engine engine, bool keep_signs) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument("walk length exceeds 2^31 - 1");
  }
  WalkTrace trace;
  std::vector<std::int8_t> signs = step_signs(spec, n, engine);
  trace.sums.assign(n + 1, 0);
  const std::span<std::int32_t> tail(trace.sums.data() + 1, n);
  switch (engine) {
    case Engine::reference:
      kernels::reference::prefix_sums(signs, tail);
      break;
    case Engine::serial:
      kernels::serial::prefix_sums(signs, tail);
      break;
    case Engine::parallel:
      kernels::parallel::prefix_sums(signs, tail);
      break;
  }
  if (keep_signs) trace.signs = std::move(signs);
  return trace;
}

RulesEngine::RulesEngine(const WalkSpec& spec) {
  if (!spec.br) {
    throw NotBrNumber("rotation " + spec.rotation.to_string() + " = " + spec.cf.to_string() +
                      " is not a BR-number");
  }
  const BigInt limit = BigInt(1) << 62;
  for (const BigInt& q : denominators_through(spec.cf, limit)) {
    q_.push_back(static_cast<std::uint64_t>(q));
  }
}

std::int64_t RulesEngine::operator()(std::uint64_t n) const {
  if (n > max_index()) throw std::out_of_range("index beyond the rules engine range");
  std::int64_t acc = 0;
  while (n > 0) {
    const auto it = std::upper_bound(q_.begin(), q_.end(), n);
    const auto i = static_cast<std::size_t>(it - q_.begin()) - 1;
    const std::uint64_t qp = q_[i];
    if (qp == n) return acc + static_cast<std::int64_t>(n & 1u);  // Rule A
    const std::uint64_t q = q_[i + 1];
    acc += static_cast<std::int64_t>(qp & 1u);
    if (2 * n >= q) {
      n = q - n - 1;  // Rule B with k = q - n
    } else {
      n -= qp;  // Rule C with k = n - q'
    }
  }
  return acc;
}

std::int64_t fast_s(const WalkSpec& spec, std::uint64_t n) { return RulesEngine(spec)(n); }

Records records(const WalkTrace& trace) {
  Records r{{0}, {0}};
  std::int32_t lo = 0, hi = 0;
  for (std::size_t n = 1; n < trace.sums.size(); ++n) {
    const std::int32_t s = trace.sums[n];
    if (s > hi || s < lo) {
      r.indices.push_back(n);
      r.values.push_back(s);
      hi = std::max(hi, s);
      lo = std::min(lo, s);
    }
  }
  return r;
}

Records records(const WalkSpec& spec, std::uint64_t n) { return records(brute_walk(spec, n)); }

std::vector<std::uint64_t> zeros(const WalkTrace& trace) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n < trace.sums.size(); ++n) {
    if (trace.sums[n] == 0) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> zeros(const WalkSpec& spec, std::uint64_t n) { return zeros(brute_walk(spec, n)); }

AbSequences ab_sequences(std::span<const std::int8_t> signs) {
  AbSequences ab;
  ab.a.reserve(signs.size() / 2 + 1);
  ab.b.reserve(signs.size() / 2 + 1);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    (signs[i] > 0 ? ab.a : ab.b).push_back(i + 1);
  }
  return ab;
}

AbSequences ab_sequences(const WalkSpec& spec, std::uint64_t n) { return ab_sequences(step_signs(spec, n)); }

std::vector<std::int64_t> diff_sequence(const WalkSpec& spec, std::uint64_t count) {
  std::uint64_t length = 2 * count + 64;
  for (;;) {
    const std::vector<std::int8_t> signs = step_signs(spec, length);
    std::vector<std::int64_t> diff(count, 0);
    std::uint64_t na = 0, nb = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      const auto j = static_cast<std::int64_t>(i + 1);
      if (signs[i] > 0) {
        if (na < count) diff[na] -= j;
        ++na;
      } else {
        if (nb < count) diff[nb] += j;
        ++nb;
      }
    }
    if (na >= count && nb >= count) return diff;
    length *= 2;
  }
}

std::vector<std::uint64_t> diff_hits(const WalkSpec& spec, std::int64_t k, std::uint64_t bound) {
  if (k < 1) throw std::invalid_argument("difference k must be positive");
  const std::vector<std::int64_t> diff = diff_sequence(spec, bound);
  std::vector<std::uint64_t> hits;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] == k) hits.push_back(i + 1);
  }
  return hits;
}

std::vector<std::int64_t> discrepancy(const QuadraticSurd& xi, std::uint64_t h, std::uint64_t k,
                                      std::uint64_t count, Engine engine) {
  if (h == 0 || h >= k) throw std::invalid_argument("interval endpoint h/k must lie in (0, 1)");
  if (xi.sign() <= 0 || compare(xi, Rational(1)) >= 0) {
    throw std::invalid_argument("rotation must lie in (0, 1)");
  }
  std::vector<std::uint8_t> inside(count);
  if (engine == Engine::reference) {
    kernels::reference::interval_indicator(xi, h, k, 1, inside);
  } else {
    const ScaledFloor f(xi);
    const ScaledFloor kf(QuadraticSurd(xi.a() * k, xi.b() * k, xi.d(), xi.c()));
    if (engine == Engine::serial) {
      kernels::serial::interval_indicator(f, kf, h, k, 1, inside);
    } else {
      kernels::parallel::interval_indicator(f, kf, h, k, 1, inside);
    }
  }
  std::vector<std::int64_t> out(count + 1, 0);
  const auto kk = static_cast<std::int64_t>(k);
  const auto hh = static_cast<std::int64_t>(h);
  for (std::size_t i = 0; i < count; ++i) out[i + 1] = out[i] + (inside[i] ? kk : 0) - hh;
  return out;
}

namespace {

template <class Count>
std::uint64_t first_reaching(const RulesEngine& engine, std::uint64_t j, Count count) {
  if (j == 0) return 0;
  std::uint64_t lo = j, hi = 2 * j + 2;
  while (count(engine, hi) < j) hi *= 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (count(engine, mid) >= j) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::uint64_t plus_count(const RulesEngine& e, std::uint64_t n) {
  return (n + static_cast<std::uint64_t>(e(n))) / 2;
}

std::uint64_t minus_count(const RulesEngine& e, std::uint64_t n) {
  return (n - static_cast<std::uint64_t>(e(n))) / 2;
}

}  // namespace

std::uint64_t plus_index(const RulesEngine& engine, std::uint64_t j) {
  return first_reaching(engine, j, plus_count);
}

std::uint64_t minus_index(const RulesEngine& engine, std::uint64_t j) {
  return first_reaching(engine, j, minus_count);
}

std::vector<std::uint64_t> kimberling_witnesses(std::int64_t k, std::size_t count) {
  if (k < 1) throw std::invalid_argument("difference k must be positive");
  const WalkSpec spec = WalkSpec::from_theta(QuadraticSurd(0, 2, 2, 1));
  const RulesEngine engine(spec);
  const std::span<const std::uint64_t> q = engine.denominators();
  const auto kk = static_cast<std::uint64_t>(k);

  const AbSequences ab = ab_sequences(spec, 4 * kk + 8);
  std::uint64_t seed = 0;
  const auto in_a = std::find(ab.a.begin(), ab.a.end(), kk);
  if (in_a != ab.a.end()) {
    const auto m = static_cast<std::uint64_t>(in_a - ab.a.begin()) + 1;
    if (m > 1 && 2 * m - 1 < q.size()) seed = (q[2 * m - 1] + 2 * m) / 4;
  } else {
    const auto in_b = std::find(ab.b.begin(), ab.b.end(), kk);
    const auto n = static_cast<std::uint64_t>(in_b - ab.b.begin()) + 1;
    std::uint64_t d = 0, used = 0;
    for (std::size_t i = 0; i < q.size() && used < n; i += 2) {
      if (q[i] > 2 * kk) {
        d += q[i];
        ++used;
      }
    }
    if (used == n) seed = (n + d) / 2;
  }
  if (seed == 0) {
    const std::vector<std::int64_t> diff = diff_sequence(spec, 100'000);
    const auto hit = std::find(diff.begin(), diff.end(), k);
    if (hit == diff.end()) throw std::runtime_error("no witness for k=" + std::to_string(k));
    seed = static_cast<std::uint64_t>(hit - diff.begin()) + 1;
  }

  std::vector<std::uint64_t> out{seed};
  for (std::size_t i = 1; i < q.size() && out.size() < count; i += 2) {
    if (q[i] / 2 >= seed && seed + q[i] / 2 <= engine.max_index() / 4) out.push_back(seed + q[i] / 2);
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw CheckFailed(what); }

}  // namespace

LemmaReport lemma_checks(const WalkSpec& spec, std::size_t depth) {
  if (compare(spec.rotation, QuadraticSurd(-1, 1, 2, 1)) != 0) {
    throw std::invalid_argument("lemma checks are stated for theta = 2 sqrt(2) (rotation sqrt(2) - 1)");
  }
  LemmaReport report;
  if (depth == 0) return report;
  const std::vector<Convergent> conv = convergents(spec.cf, 2 * depth);
  for (std::size_t m = 1; m <= depth; ++m) {
    report.denominators.push_back(static_cast<std::uint64_t>(conv[2 * m - 1].q));
  }
  const std::uint64_t qmax = report.denominators.back();

  std::uint64_t length = 2 * qmax + 64;
  std::vector<std::int8_t> signs;
  AbSequences ab;
  for (;;) {
    signs = step_signs(spec, length);
    ab = ab_sequences(signs);
    if (ab.a.size() >= qmax && ab.b.size() >= qmax) break;
    length *= 2;
  }
  std::vector<std::int32_t> s(signs.size() + 1, 0);
  kernels::serial::prefix_sums(signs, std::span<std::int32_t>(s.data() + 1, signs.size()));

  for (std::size_t m = 1; m <= depth; ++m) {
    const std::uint64_t q = report.denominators[m - 1];
    const std::uint64_t half = q / 2;
    for (std::uint64_t k = 0; k <= half; ++k) {
      if (s[half + k] != s[half] - s[k]) {
        std::ostringstream os;
        os << "reflection S_{q/2+k} = S_{q/2} - S_k fails at q=" << q << ", k=" << k << ": " << s[half + k]
           << " != " << s[half] << " - " << s[k];
        fail(os.str());
      }
      ++report.reflection_checks;
    }
    for (std::uint64_t j = 1; j <= half; ++j) {
      if (ab.a[half + j - 1] != q + ab.a[j - 1] || ab.b[half + j - 1] != q + ab.b[j - 1]) {
        std::ostringstream os;
        os << "shift a(q/2+j) = q + a(j), b(q/2+j) = q + b(j) fails at q=" << q << ", j=" << j;
        fail(os.str());
      }
      ++report.shift_checks;
    }
    if (m > 1) {
      if ((q + 2 * m) % 4 != 0) {
        fail("(q + 2m)/4 is not an integer for q=" + std::to_string(q) + ", m=" + std::to_string(m));
      }
      const std::uint64_t idx = (q + 2 * m) / 4;
      const auto lhs = static_cast<std::int64_t>(ab.b[idx - 1]) - static_cast<std::int64_t>(ab.a[idx - 1]);
      const auto rhs = static_cast<std::int64_t>(ab.a[m - 1]);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "surplus b(n) - a(n) = a(m) fails at m=" << m << ", n=" << idx << ": " << lhs << " != " << rhs;
        fail(os.str());
      }
      ++report.surplus_checks;
    }
  }
  return report;
}

}  // namespace walklab
