#include "walklab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <random>
#include <sstream>

#include "walklab/automata.hpp"
#include "walklab/errors.hpp"
#include "walklab/numeration.hpp"
#include "walklab/recurrences.hpp"
#include "walklab/substitution.hpp"
#include "walklab/walk.hpp"

namespace walklab {

Scale parse_scale(std::string_view text) {
  if (text == "quick") return Scale::quick;
  if (text == "full") return Scale::full;
  throw ParseError("unknown scale '" + std::string(text) + "' (quick, full)");
}

Scale scale_from_env(Scale fallback) {
  const char* env = std::getenv("WALKLAB_SCALE");
  return env && *env ? parse_scale(env) : fallback;
}

Bounds bounds_for(Scale scale) {
  return scale == Scale::quick ? Bounds{100'000, 10'000} : Bounds{10'000'000, 100'000};
}

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const CheckResult& r : results) {
    if (!r.passed && !r.conjectural) return &r;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"walk", "automata", "substitution", "recurrences", "numeration"};
  return names;
}

namespace {

template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw CheckFailed(os.str());
}

template <class... Parts>
std::string str(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

QuadraticSurd surd(std::string_view text) { return parse_surd(text); }

// Rotations whose odd-indexed partial quotients are all even.
const std::vector<std::string>& br_rotations() {
  static const std::vector<std::string> r{"(-1+1*sqrt(2))", "(-1+1*sqrt(2))/2", "(-2+1*sqrt(5))",
                                          "(-1+1*sqrt(3))/2", "(-2+1*sqrt(6))", "(6+1*sqrt(2))/17"};
  return r;
}

std::vector<std::uint8_t> membership(const std::vector<std::uint64_t>& members, std::uint64_t bound) {
  std::vector<std::uint8_t> in(bound + 1, 0);
  for (const std::uint64_t n : members) {
    if (n <= bound) in[n] = 1;
  }
  return in;
}

std::vector<std::uint64_t> record_indices(const WalkSpec& spec, std::uint64_t bound) {
  return records(spec, bound).indices;
}

// ---- walk ----

std::string table1(const Bounds&) {
  const std::vector<std::uint64_t> a{1, 3, 5, 6, 8, 10, 13, 15, 17, 18, 20, 22, 25, 27, 29, 30, 32, 34};
  const std::vector<std::uint64_t> b{2, 4, 7, 9, 11, 12, 14, 16, 19, 21, 23, 24, 26, 28, 31, 33, 36, 38};
  const AbSequences ab = ab_sequences(WalkSpec::from_theta(surd("2sqrt2")), 38);
  if (!std::equal(a.begin(), a.end(), ab.a.begin()) || ab.a.size() < a.size()) fail("a(1..18) differs");
  if (!std::equal(b.begin(), b.end(), ab.b.begin()) || ab.b.size() < b.size()) fail("b(1..18) differs");
  return "a(1..18), b(1..18) match";
}

std::string kimberling_positivity(const Bounds& bounds) {
  const std::uint64_t n = std::min<std::uint64_t>(bounds.walk, 1'000'000);
  const AbSequences ab = ab_sequences(WalkSpec::from_theta(surd("2sqrt2")), 3 * n);
  if (ab.a.size() < n || ab.b.size() < n) fail("walk too short for n=", n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const auto a = static_cast<std::int64_t>(ab.a[i - 1]);
    const auto b = static_cast<std::int64_t>(ab.b[i - 1]);
    const auto two_n = static_cast<std::int64_t>(2 * i);
    if (b - a <= 0) fail("b(n) - a(n) <= 0 at n=", i);
    if (a - two_n >= 0) fail("a(n) - 2n >= 0 at n=", i);
    if (b - two_n < 0) fail("b(n) - 2n < 0 at n=", i);
  }
  return str("n <= ", n);
}

std::string kimberling_hits(const Bounds& bounds) {
  const std::vector<std::int64_t> diff = diff_sequence(WalkSpec::from_theta(surd("2sqrt2")), bounds.walk);
  std::vector<std::uint64_t> count(21, 0);
  for (const std::int64_t d : diff) {
    if (d >= 1 && d <= 20) ++count[static_cast<std::size_t>(d)];
  }
  std::size_t covered = 0;
  while (covered < 20 && count[covered + 1] >= 3) ++covered;

  const RulesEngine engine(WalkSpec::from_theta(surd("2sqrt2")));
  std::uint64_t largest = 0;
  for (std::int64_t k = 1; k <= 20; ++k) {
    const std::vector<std::uint64_t> js = kimberling_witnesses(k, 3);
    if (js.size() < 3) fail("fewer than 3 witnesses for k=", k);
    for (const std::uint64_t j : js) {
      const auto d = static_cast<std::int64_t>(minus_index(engine, j)) - static_cast<std::int64_t>(plus_index(engine, j));
      if (d != k) fail("witness j=", j, " for k=", k, " has b(j) - a(j) = ", d);
      largest = std::max(largest, j);
    }
  }
  return str("3 exact witnesses for each k = 1..20 up to j=", largest, "; direct search to ", bounds.walk,
             " covers k = 1..", covered);
}

std::string pell_lemmas(const Bounds& bounds) {
  const WalkSpec spec = WalkSpec::from_theta(surd("2sqrt2"));
  const std::uint64_t limit = std::min<std::uint64_t>(bounds.walk, 100'000);
  std::size_t depth = 0;
  const std::vector<Convergent> conv = convergents(spec.cf, 64);
  while (2 * depth + 1 < conv.size() && conv[2 * depth + 1].q <= limit) ++depth;
  const LemmaReport r = lemma_checks(spec, depth);
  return str(r.denominators.size(), " denominators up to ", r.denominators.back(), ", ",
             r.reflection_checks + r.shift_checks + r.surplus_checks, " identities");
}

std::string rules_engine(const Bounds& bounds) {
  std::mt19937_64 rng(20240601);
  const std::uint64_t dense = std::min<std::uint64_t>(bounds.walk, 100'000);
  for (const std::string& r : br_rotations()) {
    const WalkSpec spec = WalkSpec::from_rotation(surd(r));
    const RulesEngine engine(spec);
    const WalkTrace trace = brute_walk(spec, bounds.walk);
    for (std::uint64_t n = 0; n <= dense; ++n) {
      if (engine(n) != trace[n]) fail(r, ": S_", n, " = ", trace[n], " but rules give ", engine(n));
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, bounds.walk);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t n = pick(rng);
      if (engine(n) != trace[n]) fail(r, ": S_", n, " = ", trace[n], " but rules give ", engine(n));
    }
  }
  return str(br_rotations().size(), " rotations, dense to ", dense, " and 1000 samples to ", bounds.walk);
}

std::string rules_engine_far(const Bounds&) {
  const WalkSpec spec = WalkSpec::from_theta(surd("2sqrt2"));
  const auto t0 = std::chrono::steady_clock::now();
  const RulesEngine engine(spec);
  const std::int64_t s = engine(1'000'000'000'000ULL);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms >= 10.0) fail("S_10^12 took ", ms, " ms");
  if (s < 0) fail("S_10^12 = ", s, " is negative");
  for (const std::uint64_t q : engine.denominators()) {
    if (q <= engine.max_index() && engine(q) != static_cast<std::int64_t>(q % 2)) fail("rule A fails at q=", q);
  }
  return "S_10^12 within 10 ms; rule A at every denominator";
}

std::string nonnegativity(const Bounds& bounds) {
  const std::uint64_t n = std::min<std::uint64_t>(bounds.walk, 1'000'000);
  for (const char* theta : {"(-1+1*sqrt(2))", "(-2+2*sqrt(2))", "(-4+2*sqrt(5))"}) {
    const WalkTrace t = brute_walk(WalkSpec::from_theta(surd(theta)), n);
    const auto it = std::min_element(t.sums.begin(), t.sums.end());
    if (*it < 0) fail("S_n(", theta, ") = ", *it, " at n=", it - t.sums.begin());
  }
  return str("three walks nonnegative to ", n);
}

std::string discrepancy_probe(const Bounds& bounds) {
  const std::uint64_t n = std::min<std::uint64_t>(bounds.walk, 1'000'000);
  const std::vector<std::int64_t> d = discrepancy(surd("(-1+1*sqrt(2))"), 1, 2, n);
  const auto low = std::min_element(d.begin(), d.end());
  if (*low < 0) fail("D_n < 0 at n=", low - d.begin());
  const std::int64_t early = *std::max_element(d.begin(), d.begin() + 1001);
  const std::int64_t late = *std::max_element(d.begin(), d.end());
  if (late <= early) fail("max D_n does not grow past n=1000 (", early, " vs ", late, ")");
  return str("2 D_n >= 0 to ", n, ", max 2 D_n ", early, " -> ", late);
}

// ---- automata ----

std::string zeros_2sqrt2(const Bounds& bounds) {
  const std::uint64_t n = bounds.automata;
  const std::vector<std::uint8_t> in = membership(zeros(WalkSpec::from_theta(surd("2sqrt2")), n), n);
  const auto is_zero = [&](std::uint64_t m) { return in[m] != 0; };
  const DigitDfa fixture = hardcoded_fixture("zeros_2sqrt2");
  if (const auto m = equiv_oracle(fixture, is_zero, pell_base(), n)) fail("fixture disagrees at n=", m->n);
  const DigitDfa built = build_zero_dfa(pell_base());
  if (const auto m = equiv_oracle(built, is_zero, pell_base(), n)) fail("built DFA disagrees at n=", m->n);
  return str("fixture and built DFA exact to ", n);
}

std::string record_fixtures(const Bounds& bounds) {
  const std::uint64_t n = bounds.automata;
  const std::vector<std::uint8_t> r1 = membership(record_indices(WalkSpec::from_theta(surd("sqrt2")), n), n);
  if (const auto m = equiv_oracle(hardcoded_fixture("records_sqrt2"), [&](std::uint64_t k) { return r1[k] != 0; },
                                  pell_base(), n)) {
    fail("records_sqrt2 disagrees at n=", m->n);
  }
  const std::vector<std::uint8_t> r2 = membership(record_indices(WalkSpec::from_theta(surd("2sqrt2")), n), n);
  if (const auto m = equiv_oracle(hardcoded_fixture("records_2sqrt2"),
                                  [&](std::uint64_t k) { return k > 0 && r2[k] != 0; }, pell_base(), n)) {
    fail("records_2sqrt2 disagrees at n=", m->n);
  }
  return str("both record fixtures exact to ", n);
}

std::string br_characterizations(const Bounds& bounds) {
  const std::uint64_t n = bounds.automata;
  for (const std::string& r : br_rotations()) {
    const QuadraticSurd xi = surd(r);
    const WalkSpec spec = WalkSpec::from_rotation(xi);
    const OstrowskiBase base(xi);
    const WalkTrace trace = brute_walk(spec, n);
    const std::vector<std::uint8_t> z = membership(zeros(trace), n);
    const std::vector<std::uint8_t> rec = membership(records(trace).indices, n);
    for (std::uint64_t m = 0; m <= n; ++m) {
      const OstrowskiWord w = encode(m, base);
      if (zero_digits(w) != (z[m] != 0)) fail(r, ": zero digit rule fails at n=", m);
      if (record_digits(w, base) != (rec[m] != 0)) fail(r, ": record digit rule fails at n=", m);
    }
    if (const auto m = equiv_oracle(build_zero_dfa(base), [&](std::uint64_t k) { return z[k] != 0; }, base, n)) {
      fail(r, ": zero DFA disagrees at n=", m->n);
    }
    if (const auto m = equiv_oracle(build_record_dfa(base), [&](std::uint64_t k) { return rec[k] != 0; }, base, n)) {
      fail(r, ": record DFA disagrees at n=", m->n);
    }
  }
  return str(br_rotations().size(), " rotations, digit rules and DFAs exact to ", n);
}

// ---- substitution ----

std::string substitution_lengths(const Bounds&) {
  for (std::uint32_t m = 2; m <= 10; m += 2) {
    const Substitution s = noble_substitution(m);
    if (s.words[0].size() != m * m + 1 || s.words[1].size() != m * m + 1 || s.words[2].size() != m * m + m + 1) {
      fail("length identity fails for m=", m);
    }
    if (s.words[0].front() != 'a') fail("sigma(a) does not start with a for m=", m);
  }
  return "m = 2, 4, 6, 8, 10";
}

std::string rotation_indicator(const QuadraticSurd& xi, std::size_t length) {
  std::vector<std::uint8_t> in(length - 1);
  if (!in.empty()) {
    // {n xi} < 1/2 iff floor(2 n xi) - 2 floor(n xi) < 1
    const ScaledFloor f(xi);
    const ScaledFloor f2(QuadraticSurd(xi.a() * 2, xi.b() * 2, xi.d(), xi.c()));
    for (std::size_t i = 0; i < in.size(); ++i) {
      const std::uint64_t j = i + 1;
      in[i] = f2.floor_int(j) - 2 * f.floor_int(j) < 1;
    }
  }
  std::string out(1, '1');
  for (const std::uint8_t b : in) out += b ? '1' : '0';
  return out;
}

std::string coded_fixed_points(const Bounds&) {
  const std::size_t length = 10'000;
  for (const std::uint32_t m : {2u, 4u}) {
    const Substitution s = noble_substitution(m);
    const std::string coded = s.code(fixed_point(s, 'a', length));
    const std::string expected = rotation_indicator(adjusted_noble_mean(m), length);
    if (coded != expected) {
      const auto at = std::mismatch(coded.begin(), coded.end(), expected.begin()).first - coded.begin();
      fail("m=", m, ": coded fixed point differs from the indicator at n=", at);
    }
  }
  const Substitution g = golden_substitution();
  const std::string coded = g.code(fixed_point(g, 'a', length));
  const std::string expected = rotation_indicator(adjusted_noble_mean(1), length);
  if (coded != expected) {
    const auto at = std::mismatch(coded.begin(), coded.end(), expected.begin()).first - coded.begin();
    fail("golden: coded fixed point differs from the indicator at n=", at);
  }
  return str("m = 2, 4 and golden, ", length, " letters");
}

std::string nonnegativity_transfer(const Bounds& bounds) {
  const std::size_t length = std::min<std::uint64_t>(bounds.walk, 100'000);
  for (const std::uint32_t m : {2u, 4u, 6u}) {
    const Substitution s = noble_substitution(m);
    const RunningSum r = running_sum_extrema(fixed_point(s, 'a', length), s);
    if (r.min < 0) fail("m=", m, ": running sum reaches ", r.min);
  }
  return str("m = 2, 4, 6, ", length, " letters");
}

std::string return_maps(const Bounds&) {
  std::size_t points = 0;
  for (const std::uint32_t m : {2u, 4u}) {
    for (const ReturnMapReport& r : return_map_empirical(m, return_map_samples(m, 100))) {
      if (!r.formula_ok) fail("m=", m, ": return of ", to_string(r.start), " misses the R(x) formula");
      if (!r.itinerary_ok) fail("m=", m, ": itinerary ", r.itinerary, " of ", to_string(r.start), " is not sigma(", r.label, ")");
      ++points;
    }
  }
  return str(points, " exact points");
}

std::string golden_running_sums(const Bounds&) {
  const Substitution g = golden_substitution();
  const RunningSum a = running_sum_extrema(g.words[0], g);
  const RunningSum b = running_sum_extrema(g.words[1], g);
  const RunningSum c = running_sum_extrema(g.words[2], g);
  if (a.min < 0 || b.min < 0) fail("running sums of sigma(a), sigma(b) go negative");
  if (c.min != -2) fail("running-sum minimum of sigma(c) is ", c.min);
  return "sigma(a), sigma(b) >= 0; min over sigma(c) = -2";
}

// ---- recurrences ----

std::string lune(const Bounds& bounds) {
  const std::uint64_t n = std::min<std::uint64_t>(bounds.walk, 1'000'000);
  const Records r = records(WalkSpec::from_theta(surd("sqrt2")), n);
  const RecurrenceSeq seq = lune_records(r.indices.size() - 1);
  for (std::size_t i = 0; i < r.indices.size(); ++i) {
    if (seq.terms[i] != r.indices[i]) fail("record ", i, " is ", r.indices[i], ", recurrence gives ", seq.terms[i]);
  }
  for (std::size_t i = 2; i < r.values.size(); ++i) {
    if ((r.values[i] > 0) == (r.values[i - 1] > 0)) fail("record values ", i - 1, ", ", i, " share a sign");
  }
  const RecurrenceSeq a = kotesovec(r.indices.size() / 2, Side::A);
  const RecurrenceSeq b = kotesovec(r.indices.size() / 2, Side::B);
  for (std::size_t i = 0; i < r.indices.size(); ++i) {
    const BigInt& expected = i % 2 == 0 ? a.terms[i / 2] : b.terms[(i + 1) / 2];
    if (expected != r.indices[i]) fail("record ", i, " does not follow the A/B split");
  }
  if (!a.satisfies_rule() || !b.satisfies_rule()) fail("A/B terms break X_{n+1} = 6X_n - X_{n-1} + 2");
  return str(r.indices.size(), " records to ", n);
}

std::string half_pell_records(const Bounds& bounds) {
  const std::uint64_t n = std::min<std::uint64_t>(bounds.walk, 1'000'000);
  const Records r = records(WalkSpec::from_theta(surd("2sqrt2")), n);
  const RecurrenceSeq q = half_pell(r.indices.size() - 1);
  for (std::size_t i = 1; i < r.indices.size(); ++i) {
    if (q.terms[i - 1] != r.indices[i]) fail("record ", i, " is ", r.indices[i], ", expected ", q.terms[i - 1]);
    if (2 * q.terms[i - 1] != pell(2 * i)) fail("Q_", i, " is not P_", 2 * i, "/2");
  }
  return str(r.indices.size() - 1, " records to ", n);
}

std::string sqrt3(const Bounds& bounds) {
  const std::vector<std::uint64_t> printed{1, 2, 3, 7, 18, 33, 48, 104, 257, 466, 675, 1455, 3586};
  const std::uint64_t n = std::max<std::uint64_t>(std::min<std::uint64_t>(bounds.walk, 1'000'000), 3586);
  std::vector<std::uint64_t> brute = records(WalkSpec::from_theta(surd("sqrt3")), n).indices;
  brute.erase(brute.begin());
  if (brute.size() < printed.size() || !std::equal(printed.begin(), printed.end(), brute.begin())) {
    fail("records up to 3586 differ from the printed values");
  }
  const RecurrenceSeq t = sqrt3_records(brute.size());
  for (std::size_t i = 0; i < brute.size(); ++i) {
    if (t.terms[i] != brute[i]) fail("record ", i + 1, " is ", brute[i], ", recurrence gives ", t.terms[i]);
  }
  return str(brute.size(), " records to ", n);
}

// ---- numeration ----

std::string roundtrip(const Bounds&) {
  const std::uint64_t n = 100'000;
  for (const char* b : {"sqrt2m1", "(-1+1*sqrt(2))/2", "golden"}) {
    const QuadraticSurd xi = surd(b);
    const OstrowskiBase base(as_surd(frac(xi)));
    for (std::uint64_t m = 0; m <= n; ++m) {
      const OstrowskiWord w = encode(m, base);
      if (!validate(w.digits, base)) fail(b, ": encode(", m, ") is not a valid word");
      if (decode(w, base) != m) fail(b, ": decode(encode(", m, ")) != ", m);
    }
  }
  const OstrowskiBase& pell = pell_base();
  if (format_word(encode(std::uint64_t{69}, pell), pell) != "20201") fail("69 does not encode to 20201");
  if (decode(parse_word("20201"), pell) != 69) fail("20201 does not decode to 69");
  return str("three bases to ", n, "; 69 <-> 20201");
}

// Digits are placed msd first, at positions length-1 down to 0.
void enumerate(const OstrowskiBase& base, std::size_t length, std::vector<Digit>& digits,
               std::vector<std::uint8_t>& seen, std::uint64_t& count) {
  if (digits.size() == length) {
    const std::uint64_t v = decode_u64(OstrowskiWord::from_msd(digits).digits, base);
    if (v >= seen.size()) fail("word value ", v, " outside [0, q_L)");
    if (seen[v]++) fail("two words decode to ", v);
    ++count;
    return;
  }
  const std::size_t pos = length - 1 - digits.size();
  const Digit a = base.quotient_after(pos);
  const bool capped = !digits.empty() && digits.back() == base.quotient_after(pos + 1);
  const Digit top = capped ? 0 : (pos == 0 ? a - 1 : a);
  for (Digit d = 0; d <= top; ++d) {
    digits.push_back(d);
    enumerate(base, length, digits, seen, count);
    digits.pop_back();
  }
}

std::string uniqueness(const Bounds&) {
  const OstrowskiBase& base = pell_base();
  std::size_t length = 0;
  while (base.place_values_u64()[length] <= 10'000) ++length;
  const std::uint64_t q = base.place_values_u64()[length];
  std::vector<std::uint8_t> seen(q, 0);
  std::vector<Digit> digits;
  std::uint64_t count = 0;
  enumerate(base, length, digits, seen, count);
  if (count != q) fail(count, " valid words of length ", length, " for ", q, " values");
  return str("all ", count, " valid Pell words of length ", length, " hit [0, ", q, ") once");
}

}  // namespace

std::vector<Check> standard_checks() {
  return {
      {"walk", "table1", false, table1},
      {"walk", "kimberling_positivity", false, kimberling_positivity},
      {"walk", "kimberling_hits", false, kimberling_hits},
      {"walk", "pell_lemmas", false, pell_lemmas},
      {"walk", "rules_engine", false, rules_engine},
      {"walk", "rules_engine_far", false, rules_engine_far},
      {"walk", "nonnegativity", false, nonnegativity},
      {"walk", "discrepancy", false, discrepancy_probe},
      {"automata", "zeros_2sqrt2", false, zeros_2sqrt2},
      {"automata", "record_fixtures", false, record_fixtures},
      {"automata", "br_characterizations", false, br_characterizations},
      {"substitution", "lengths", false, substitution_lengths},
      {"substitution", "coded_fixed_points", false, coded_fixed_points},
      {"substitution", "nonnegativity", false, nonnegativity_transfer},
      {"substitution", "return_maps", false, return_maps},
      {"substitution", "golden_running_sums", false, golden_running_sums},
      {"recurrences", "lune", false, lune},
      {"recurrences", "half_pell", false, half_pell_records},
      {"recurrences", "sqrt3", true, sqrt3},
      {"numeration", "roundtrip", false, roundtrip},
      {"numeration", "uniqueness", false, uniqueness},
  };
}

VerifyReport run_checks(const std::vector<Check>& checks, std::string_view suite, const Bounds& bounds) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ParseError("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  for (const Check& c : checks) {
    if (suite != "all" && c.suite != suite) continue;
    CheckResult r{c.suite, c.name, false, c.conjectural, {}};
    try {
      r.detail = c.body(bounds);
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& x, const CheckResult& y) {
    return std::tie(x.suite, x.name) < std::tie(y.suite, y.name);
  });
  return report;
}

void write_report(std::ostream& os, const VerifyReport& report, bool json) {
  if (json) {
    nlohmann::json j;
    j["ok"] = report.ok();
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const CheckResult& r : report.results) {
      arr.push_back({{"suite", r.suite},
                     {"name", r.name},
                     {"status", r.passed ? "pass" : "fail"},
                     {"conjectural", r.conjectural},
                     {"detail", r.detail}});
    }
    os << j.dump(2) << '\n';
    return;
  }
  for (const CheckResult& r : report.results) {
    os << r.suite << '.' << r.name << ": " << (r.conjectural ? "conjectural: " : "") << (r.passed ? "pass" : "FAIL")
       << " (" << r.detail << ")\n";
  }
  os << (report.ok() ? "ok" : "failed") << '\n';
}

}  // namespace walklab
