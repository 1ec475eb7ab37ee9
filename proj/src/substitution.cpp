#include "walklab/substitution.hpp"

#include <stdexcept>

#include "walklab/errors.hpp"

namespace walklab {

std::size_t letter_index(char letter) {
  if (letter < 'a' || letter > 'c') {
    throw std::invalid_argument(std::string("letter '") + letter + "' outside {a, b, c}");
  }
  return static_cast<std::size_t>(letter - 'a');
}

const std::string& Substitution::image(char letter) const { return words[letter_index(letter)]; }

std::string Substitution::apply(std::string_view word) const {
  std::string out;
  for (const char x : word) out += image(x);
  return out;
}

std::string Substitution::code(std::string_view word) const {
  std::string out;
  out.reserve(word.size());
  for (const char x : word) out += static_cast<char>('0' + coding[letter_index(x)]);
  return out;
}

namespace {

std::string block(std::uint32_t na, std::uint32_t nb) { return std::string(na, 'a') + std::string(nb, 'b') + "c"; }

std::string repeat(const std::string& w, std::uint32_t times) {
  std::string out;
  for (std::uint32_t i = 0; i < times; ++i) out += w;
  return out;
}

}  // namespace

Substitution noble_substitution(std::uint32_t m) {
  if (m < 2 || m % 2 != 0) throw OddM("noble substitution needs an even m >= 2, got " + std::to_string(m));
  const std::uint32_t k = m / 2;
  const std::uint32_t p = m;
  const std::string tail = block(k, k - 1);
  return Substitution{"noble" + std::to_string(m),
                      {block(k + 1, k - 1) + repeat(tail, p - 1), block(k, k) + repeat(tail, p - 1),
                       block(k, k) + repeat(tail, p)},
                      {1, 0, 0},
                      {1, -1, -1}};
}

Substitution golden_substitution() {
  return Substitution{"golden",
                      {"acacbacaccacb", "acacbacaccacbacaccacb", "acaccacaccacbacaccacb"},
                      {1, 1, 0},
                      {1, 1, -1}};
}

FixedPointStream::FixedPointStream(const Substitution& sub, char seed) : sub_(&sub), buffer_(sub.image(seed)) {
  if (buffer_.size() < 2 || buffer_.front() != seed) {
    throw NotProlongable(std::string("sigma(") + seed + ") = " + buffer_ + " does not extend " + seed);
  }
}

char FixedPointStream::next() {
  while (emitted_ >= buffer_.size()) buffer_ += sub_->image(buffer_[expanded_++]);
  return buffer_[emitted_++];
}

std::string fixed_point(const Substitution& sub, char seed, std::size_t length) {
  FixedPointStream stream(sub, seed);
  std::string out(length, ' ');
  for (char& x : out) x = stream.next();
  return out;
}

RunningSum running_sum_extrema(std::string_view word, const Substitution& sub) {
  RunningSum r;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s += sub.sign[letter_index(word[i])];
    if (i == 0 || s < r.min) r.min = s;
    if (i == 0 || s > r.max) r.max = s;
  }
  r.final = s;
  return r;
}

namespace {

struct NoblePartition {
  QuadraticSurd xi;
  Number window;     // 1 - m xi
  Number one_minus;  // 1 - xi
  Number a_end;      // 1/2 - k xi
  Number b_end;      // (1 - xi)(1 - m xi)
  Number threshold;  // (m + 1) - (m^2 + m + 1) xi

  explicit NoblePartition(std::uint32_t m) : xi(adjusted_noble_mean(m)) {
    const Number x = xi;
    const Rational mm(m);
    window = Rational(1) - mm * x;
    one_minus = Rational(1) - x;
    a_end = Rational(1, 2) - Rational(m / 2) * x;
    b_end = one_minus * window;
    threshold = Rational(m + 1) - Rational(m * m + m + 1) * x;
  }
};

void require_off(const Number& x, const Number& boundary, const char* what) {
  if (compare(x, boundary) == 0) {
    throw std::logic_error("orbit point " + to_string(x) + " hits the partition endpoint " + what);
  }
}

char partition_letter(const Number& x, const NoblePartition& part) {
  require_off(x, Rational(1, 2), "1/2");
  require_off(x, part.one_minus, "1 - xi");
  if (compare(x, Rational(1, 2)) < 0) return 'a';
  return compare(x, part.one_minus) < 0 ? 'b' : 'c';
}

char sub_interval(const Number& x, const NoblePartition& part) {
  require_off(x, part.a_end, "1/2 - k xi");
  require_off(x, part.b_end, "(1 - xi)(1 - m xi)");
  if (compare(x, part.a_end) < 0) return 'a';
  return compare(x, part.b_end) < 0 ? 'b' : 'c';
}

}  // namespace

std::vector<ReturnMapReport> return_map_empirical(std::uint32_t m, const std::vector<Number>& starts,
                                                  std::size_t max_iterations) {
  const Substitution sub = noble_substitution(m);
  const NoblePartition part(m);
  const Number xi = part.xi;
  std::vector<ReturnMapReport> out;
  out.reserve(starts.size());
  for (const Number& start : starts) {
    if (sign(start) < 0 || compare(start, part.window) >= 0) {
      throw std::invalid_argument("start " + to_string(start) + " outside [0, 1 - m xi)");
    }
    ReturnMapReport r;
    r.start = start;
    r.label = sub_interval(start, part);
    Number x = start;
    do {
      if (r.return_time == max_iterations) {
        throw NoReturn("no return to [0, 1 - m xi) from " + to_string(start) + " within " +
                       std::to_string(max_iterations) + " steps");
      }
      r.itinerary += partition_letter(x, part);
      x = frac(x + xi);
      ++r.return_time;
    } while (compare(x, part.window) >= 0);
    r.image = x;

    const std::int64_t mi = m;
    const Number predicted = compare(start, part.threshold) < 0
                                 ? start + Rational(mi * mi + 1) * xi - Rational(mi)
                                 : start + Rational(mi * mi + mi + 1) * xi - Rational(mi + 1);
    r.formula_ok = compare(predicted, r.image) == 0;
    r.itinerary_ok = r.itinerary == sub.image(r.label);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Number> return_map_samples(std::uint32_t m, std::size_t count) {
  const NoblePartition part(m);
  std::vector<Number> out;
  if (count == 0) return out;
  out.emplace_back(Rational(0));
  const auto den = static_cast<std::int64_t>(2 * count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    out.push_back(Rational(static_cast<std::int64_t>(2 * i + 1), den) * part.window);
  }
  return out;
}

}  // namespace walklab
