#include "walklab/qarith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace walklab {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// (a + b*sqrt(d))/c with no normalization; b may be zero.
struct Raw {
  BigInt a;
  BigInt b;
  BigInt d;
  BigInt c;
};

Raw to_raw(const Number& x, const BigInt& d) {
  if (const auto* r = std::get_if<Rational>(&x)) {
    return {boost::multiprecision::numerator(*r), 0, d,
            boost::multiprecision::denominator(*r)};
  }
  const auto& s = std::get<QuadraticSurd>(x);
  return {s.a(), s.b(), s.d(), s.c()};
}

Number from_raw(Raw r) {
  if (r.c == 0) throw DivisionByZero("zero denominator");
  if (r.b == 0) return Rational(r.a, r.c);
  return QuadraticSurd(std::move(r.a), std::move(r.b), std::move(r.d), std::move(r.c));
}

// Common radicand of two operands, or 0 when both are rational.
BigInt common_radicand(const Number& x, const Number& y) {
  const auto* sx = std::get_if<QuadraticSurd>(&x);
  const auto* sy = std::get_if<QuadraticSurd>(&y);
  if (sx && sy && sx->d() != sy->d()) {
    throw MixedRadicand("radicands differ: " + sx->d().str() + " vs " + sy->d().str());
  }
  if (sx) return sx->d();
  if (sy) return sy->d();
  return 0;
}

// Sign of a + b*sqrt(d).
int sign_of(const BigInt& a, const BigInt& b, const BigInt& d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 d; never equal for squarefree d > 1.
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

// floor((a + b*sqrt(d))/c) for c > 0, b != 0, d not a square.
BigInt floor_raw(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& c) {
  const BigInt r = isqrt(b * b * d);
  if (b > 0) return floor_div(a + r, c);
  return floor_div(a - r - 1, c);
}

std::atomic<std::uint64_t> g_fallbacks{0};

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  if (c_ == 0) throw DivisionByZero("surd with zero denominator");
  if (d_ <= 0) throw std::invalid_argument("radicand must be positive");
  BigInt square_part = 1;
  for (BigInt p = 2; p * p <= d_; ++p) {
    const BigInt pp = p * p;
    while (d_ % pp == 0) {
      d_ /= pp;
      square_part *= p;
    }
  }
  b_ *= square_part;
  if (b_ == 0 || d_ == 1) throw NotIrrational("value is rational");
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  const BigInt g = gcd(gcd(abs(a_), abs(b_)), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

int QuadraticSurd::sign() const { return sign_of(a_, b_, d_); }

double QuadraticSurd::approx() const {
  const double root = std::sqrt(d_.convert_to<double>());
  return (a_.convert_to<double>() + b_.convert_to<double>() * root) / c_.convert_to<double>();
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(a_, -b_, d_, c_); }

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  os << '(' << a_ << (b_ < 0 ? '-' : '+') << abs(b_) << "*sqrt(" << d_ << "))/" << c_;
  return os.str();
}

Number add(const Number& x, const Number& y) {
  if (std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(y)) {
    return Rational(std::get<Rational>(x) + std::get<Rational>(y));
  }
  const BigInt d = common_radicand(x, y);
  const Raw u = to_raw(x, d);
  const Raw v = to_raw(y, d);
  return from_raw({u.a * v.c + v.a * u.c, u.b * v.c + v.b * u.c, d, u.c * v.c});
}

Number sub(const Number& x, const Number& y) {
  if (const auto* r = std::get_if<Rational>(&y)) return add(x, Rational(-*r));
  const auto& s = std::get<QuadraticSurd>(y);
  return add(x, QuadraticSurd(-s.a(), -s.b(), s.d(), s.c()));
}

Number mul(const Number& x, const Number& y) {
  if (std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(y)) {
    return Rational(std::get<Rational>(x) * std::get<Rational>(y));
  }
  const BigInt d = common_radicand(x, y);
  const Raw u = to_raw(x, d);
  const Raw v = to_raw(y, d);
  return from_raw({u.a * v.a + u.b * v.b * d, u.a * v.b + u.b * v.a, d, u.c * v.c});
}

Number div(const Number& x, const Number& y) {
  if (sign(y) == 0) throw DivisionByZero("division by zero");
  if (std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(y)) {
    return Rational(std::get<Rational>(x) / std::get<Rational>(y));
  }
  const BigInt d = common_radicand(x, y);
  const Raw v = to_raw(y, d);
  // 1/y = c (a - b sqrt d) / (a^2 - b^2 d)
  const Raw inv{v.c * v.a, -v.c * v.b, d, v.a * v.a - v.b * v.b * d};
  return mul(x, from_raw(inv));
}

int sign(const Number& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->sign();
  return std::get<QuadraticSurd>(x).sign();
}

int compare(const Number& x, const Number& y) { return sign(sub(x, y)); }

BigInt floor(const Number& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return floor_of(*r);
  const auto& s = std::get<QuadraticSurd>(x);
  return floor_raw(s.a(), s.b(), s.d(), s.c());
}

Number frac(const Number& x) { return sub(x, Rational(floor(x))); }

double approx(const Number& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->convert_to<double>();
  return std::get<QuadraticSurd>(x).approx();
}

std::string to_string(const Number& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->str();
  return std::get<QuadraticSurd>(x).to_string();
}

const QuadraticSurd& as_surd(const Number& x) {
  if (const auto* s = std::get_if<QuadraticSurd>(&x)) return *s;
  throw NotIrrational("expected an irrational value, got " + to_string(x));
}

BigInt floor_scaled(const BigInt& j, const QuadraticSurd& xi) {
  if (j == 0) return 0;
  return floor_raw(j * xi.a(), j * xi.b(), xi.d(), xi.c());
}

ScaledFloor::ScaledFloor(const QuadraticSurd& theta) : theta_(theta) {
  int_part_ = floor(Number(theta_));
  int_odd_ = (int_part_ % 2 != 0) ? 1u : 0u;
  if (const auto v = to_i64(int_part_)) {
    int_part_i64_ = *v;
    int_fits_ = true;
  }
  const BigInt two64 = BigInt(1) << 64;
  const BigInt f = floor_scaled(two64, theta_) - int_part_ * two64;
  frac_fixed_ = static_cast<std::uint64_t>(f);
}

BigInt ScaledFloor::operator()(std::uint64_t j) const {
  if (auto ff = fractional_floor(j)) return int_part_ * j + *ff;
  g_fallbacks.fetch_add(1, std::memory_order_relaxed);
  return exact(j);
}

int ScaledFloor::parity_slow(std::uint64_t j) const {
  g_fallbacks.fetch_add(1, std::memory_order_relaxed);
  return exact(j) % 2 != 0 ? 1 : 0;
}

std::int64_t ScaledFloor::floor_int_slow(std::uint64_t j) const {
  g_fallbacks.fetch_add(1, std::memory_order_relaxed);
  const auto v = to_i64(exact(j));
  if (!v) throw std::overflow_error("floor(j*theta) exceeds 64 bits");
  return *v;
}

std::uint64_t ScaledFloor::fallback_count() { return g_fallbacks.load(); }

ContinuedFraction::ContinuedFraction(std::vector<BigInt> preperiod, std::vector<BigInt> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("continued fraction period must be nonempty");
  for (std::size_t i = 1; i < preperiod_.size(); ++i) {
    if (preperiod_[i] < 1) throw std::invalid_argument("partial quotients a_i must be >= 1 for i >= 1");
  }
  for (const auto& a : period_) {
    if (a < 1) throw std::invalid_argument("partial quotients a_i must be >= 1 for i >= 1");
  }
}

BigInt ContinuedFraction::max_tail_quotient() const {
  BigInt best = 0;
  const std::size_t span = preperiod_.size() + period_.size();
  for (std::size_t i = 1; i <= span; ++i) best = std::max(best, partial_quotient(i));
  return best;
}

std::string ContinuedFraction::to_string() const {
  std::vector<std::string> parts;
  for (const auto& a : preperiod_) parts.push_back(a.str());
  std::string per = "(";
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (i) per += ", ";
    per += period_[i].str();
  }
  per += ")";
  parts.push_back(per);
  std::string out = "[" + parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += (i == 1 ? "; " : ", ") + parts[i];
  return out + "]";
}

ContinuedFraction cf_expand(const QuadraticSurd& xi) {
  if (xi.b() == 0) throw NotIrrational("continued fraction of a rational value");
  // xi = (P + sqrt(D))/Q with Q | D - P^2.
  BigInt D = xi.b() * xi.b() * xi.d();
  BigInt P = xi.b() > 0 ? xi.a() : BigInt(-xi.a());
  BigInt Q = xi.b() > 0 ? xi.c() : BigInt(-xi.c());
  if ((D - P * P) % Q != 0) {
    const BigInt aq = abs(Q);
    P *= aq;
    D *= Q * Q;
    Q *= aq;
  }
  const BigInt root = isqrt(D);

  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!inserted) {
      const std::size_t start = it->second;
      std::vector<BigInt> pre(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<BigInt> per(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
      return ContinuedFraction(std::move(pre), std::move(per));
    }
    const BigInt a = Q > 0 ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n) {
  std::vector<Convergent> out;
  out.reserve(n + 1);
  BigInt p_prev = 1, p_prev2 = 0;
  BigInt q_prev = 0, q_prev2 = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt& a = cf.partial_quotient(i);
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

std::vector<BigInt> denominators_through(const ContinuedFraction& cf, const BigInt& limit) {
  std::vector<BigInt> q{1};
  BigInt prev = 0;
  for (std::size_t i = 1; q.back() <= limit; ++i) {
    BigInt next = cf.partial_quotient(i) * q.back() + prev;
    prev = q.back();
    q.push_back(std::move(next));
  }
  return q;
}

bool is_br(const ContinuedFraction& cf) {
  const std::size_t span = cf.preperiod().size() + 2 * cf.period().size();
  for (std::size_t i = 1; i <= span; i += 2) {
    if (cf.partial_quotient(i) % 2 != 0) return false;
  }
  return true;
}

QuadraticSurd adjusted_noble_mean(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("noble mean index must be positive");
  const BigInt mm = m;
  return QuadraticSurd(-mm, 1, mm * mm + 4, 2);
}

QuadraticSurd parse_surd(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s == "sqrt2") return QuadraticSurd(0, 1, 2, 1);
  if (s == "2sqrt2") return QuadraticSurd(0, 2, 2, 1);
  if (s == "sqrt3") return QuadraticSurd(0, 1, 3, 1);
  if (s == "silver") return QuadraticSurd(1, 1, 2, 1);
  if (s == "golden") return QuadraticSurd(1, 1, 5, 2);
  if (s == "sqrt3over2") return QuadraticSurd(0, 1, 3, 2);
  if (s == "sqrt2m1") return QuadraticSurd(-1, 1, 2, 1);
  if (s == "halfsqrt2m1") return QuadraticSurd(-1, 1, 2, 2);
  if (s.rfind("noble", 0) == 0 && s.size() > 5 &&
      std::all_of(s.begin() + 5, s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    return adjusted_noble_mean(static_cast<std::uint32_t>(std::stoul(s.substr(5))));
  }
  static const std::regex kLiteral(R"(^\(([+-]?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)(?:/(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, kLiteral)) {
    throw ParseError("cannot parse surd literal '" + std::string(text) +
                     "'; expected (a+b*sqrt(d))/c or a named value");
  }
  std::string a_text = m[1].str();
  if (a_text.front() == '+') a_text.erase(0, 1);
  BigInt a(a_text);
  BigInt b(m[3].str());
  if (m[2].str() == "-") b = -b;
  BigInt d(m[4].str());
  BigInt c = m[5].matched ? BigInt(m[5].str()) : BigInt(1);
  return QuadraticSurd(std::move(a), std::move(b), std::move(d), std::move(c));
}

}  // namespace walklab
