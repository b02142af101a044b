#pragma once

// Exhaustive-search ground truth for tiny grids. Depth-first search over
// per-cell labels in column-major order with incumbent pruning and an
// infeasibility cut on cells whose neighbourhood is fully decided. Works
// straight from the problem definition, independent of the column-state
// machinery it is used to validate.

#include "griddom/grid.hpp"
#include "griddom/variant.hpp"

namespace griddom {

struct OracleResult {
  long long value = 0;
  GridAssignment witness;
};

// Size caps: n*m <= 24 for the domination variants, n*m <= 14 for Roman.
// Throws CapacityError beyond them.
OracleResult bruteForceMin(int n, int m, Variant v);

}  // namespace griddom
