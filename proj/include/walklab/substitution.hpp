#pragma once

// Substitutions over {a, b, c} that describe the first-return map of the
// rotation by a noble mean, together with their 0/1 and +-1 codings.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/qarith.hpp"

namespace walklab {

struct Substitution {
  std::string name;
  std::array<std::string, 3> words;   // images of a, b, c
  std::array<std::uint8_t, 3> coding; // tau
  std::array<std::int8_t, 3> sign;    // +1 where tau is 1, -1 elsewhere

  const std::string& image(char letter) const;
  std::string apply(std::string_view word) const;
  std::string code(std::string_view word) const;  // tau as a string of '0'/'1'
};

// Throws std::invalid_argument for letters outside {a, b, c}.
std::size_t letter_index(char letter);

// Noble mean m even: k = m/2, exponent p = m,
//   a -> a^{k+1} b^{k-1} c (a^k b^{k-1} c)^{m-1}
//   b -> a^k b^k c (a^k b^{k-1} c)^{m-1}
//   c -> a^k b^k c (a^k b^{k-1} c)^m
// tau: a -> 1, b, c -> 0. Throws OddM otherwise.
Substitution noble_substitution(std::uint32_t m);

// The golden-mean example on [0, 5 - 8 xi_1), tau: a, b -> 1, c -> 0.
Substitution golden_substitution();

// Letters of the fixed point of `sub` grown from `seed`, one at a time. Only
// the prefix emitted so far is kept.
class FixedPointStream {
 public:
  FixedPointStream(const Substitution& sub, char seed);  // throws NotProlongable

  char next();

 private:
  const Substitution* sub_;
  std::string buffer_;
  std::size_t emitted_ = 0;
  std::size_t expanded_ = 1;
};

std::string fixed_point(const Substitution& sub, char seed, std::size_t length);

struct RunningSum {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::int64_t final = 0;
};

// Extrema over the nonempty prefixes under sub.sign; all zero for an empty word.
RunningSum running_sum_extrema(std::string_view word, const Substitution& sub);

struct ReturnMapReport {
  Number start;
  Number image;            // first return to [0, 1 - m xi)
  char label = 'a';        // sub-interval a', b' or c' holding start, as 'a' 'b' 'c'
  std::size_t return_time = 0;
  std::string itinerary;   // partition letters of start and each later point before the return
  bool formula_ok = false;    // image agrees with the two-branch R(x)
  bool itinerary_ok = false;  // itinerary equals sigma(label)
};

// Rotates each start by xi_m exactly until it comes back to [0, 1 - m xi_m).
// Starts must lie in that interval. Throws OddM for odd m, NoReturn past
// max_iterations, std::logic_error if an orbit point hits a partition endpoint.
std::vector<ReturnMapReport> return_map_empirical(std::uint32_t m, const std::vector<Number>& starts,
                                                  std::size_t max_iterations = 1000);

// 0 followed by (2i + 1)/(2 count - 1) * (1 - m xi_m) for i < count - 1.
std::vector<Number> return_map_samples(std::uint32_t m, std::size_t count);

}  // namespace walklab
