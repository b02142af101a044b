#pragma once

// Constructs explicit 2-dominating sets of target size for large grids:
// project the period-3 diagonal lattice onto the grid, repair each 6x6
// corner by an exhaustive minimum-stone patch, then put stones on the
// boundary cells still short of their demand.

#include "griddom/grid.hpp"

namespace griddom {

struct WitnessResult {
  GridAssignment grid;
  long long cost = 0;
  long long target = 0;   // floor((n+2)(m+2)/3) - 6
  bool matched = false;   // cost == target and the grid validates
};

// Requires 14 <= n and 14 <= m. Never fails silently: when no candidate
// reaches the target the best valid assignment is returned with
// matched == false.
WitnessResult buildTwoDominationWitness(int n, int m);

}  // namespace griddom
