#pragma once

#include <cstdint>
#include <vector>

#include "matchlab/family.hpp"

namespace matchlab {

struct ShiftStep {
  int i = 0;
  int j = 0;
  int moved_count = 0;
  friend bool operator==(const ShiftStep&, const ShiftStep&) = default;
};

struct ShiftLog {
  std::vector<ShiftStep> steps;
};

// (i,j)-compression: F with j in F, i not in F becomes F - j + i unless that
// set is already present. Requires 1 <= i < j <= n.
Family shift(const Family& fam, int i, int j);
// Same, also reporting how many members moved.
Family shift(const Family& fam, int i, int j, int& moved);

struct StabilizeResult {
  Family family;
  ShiftLog log;
};

// Applies shifts over pairs in lexicographic order, restarting from (1,2)
// after any change, until no shift moves anything.
StabilizeResult stabilize(const Family& fam);

// Sum over members of the sum of their elements; strictly drops on every move.
std::int64_t potential(const Family& fam);

}  // namespace matchlab
