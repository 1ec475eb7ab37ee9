#pragma once

// Closed-form recurrences for walk records, generated exactly.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/bigint.hpp"

namespace walklab {

enum class RecurrenceRule {
  lune,       // R_{n+1} = 2 R_n + R_{n-1} + 1
  kotesovec,  // X_{n+1} = 6 X_n - X_{n-1} + 2
  half_pell,  // Q_{n+1} = 6 Q_n - Q_{n-1}
  sqrt3,      // four interleaved rules indexed by j mod 4
};

struct RecurrenceSeq {
  std::string name;
  RecurrenceRule rule;
  std::size_t first_index = 0;  // index of terms[0]
  std::vector<BigInt> initial;
  std::vector<BigInt> terms;

  // True when every generated term follows the rule from its predecessors.
  bool satisfies_rule() const;
};

// R_0..R_n with R_0 = 0, R_1 = 1.
RecurrenceSeq lune_records(std::size_t n);

enum class Side { A, B };
// X_0..X_n with A_0 = 0, A_1 = 3 or B_0 = 0, B_1 = 1.
RecurrenceSeq kotesovec(std::size_t n, Side side);

// Q_1..Q_n with Q_0 = 0, Q_1 = 1.
RecurrenceSeq half_pell(std::size_t n);

// t_1..t_n with t_j = 0 for j <= 0:
//   t_{4n+1} = 2 t_{4n} + t_{4n-1} + 1
//   t_{4n+2} = t_{4n+1} + 2 t_{4n} + 1
//   t_{4n+3} = t_{4n+2} + 2 t_{4n} + 1
//   t_{4n+4} = 2 t_{4n+3} + t_{4n} + 1
RecurrenceSeq sqrt3_records(std::size_t n);

// "lune", "kotesovecA", "kotesovecB", "halfpell", "sqrt3"; n counts terms
// after the leading zero where the sequence has one.
RecurrenceSeq recurrence_by_name(std::string_view name, std::size_t n);

}  // namespace walklab
