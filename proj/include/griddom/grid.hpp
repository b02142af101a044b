#pragma once

// Whole-grid stone assignments: the verifiable witness format shared by
// the oracle, the witness builder and the tests.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "griddom/variant.hpp"

namespace griddom {

// rows x cols array of per-cell stone counts: 0/1 for the domination
// variants, 0/1/2 for Roman.
struct GridAssignment {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> stones;  // row-major

  GridAssignment() = default;
  GridAssignment(int r, int c)
      : rows(r), cols(c),
        stones(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::uint8_t at(int r, int c) const {
    return stones[static_cast<std::size_t>(r) * cols + c];
  }
  void set(int r, int c, std::uint8_t v) {
    stones[static_cast<std::size_t>(r) * cols + c] = v;
  }
  bool inside(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
  std::uint8_t atOr0(int r, int c) const { return inside(r, c) ? at(r, c) : 0; }

  GridAssignment transposed() const;
};

// True iff every cell meets the variant's domination demand within the
// finite grid.
bool isDominating(const GridAssignment& a, Variant v);

// Total stones; for Roman |S1| + 2|S2|.
long long assignmentCost(const GridAssignment& a, Variant v);

// Column images of the assignment under the cell-state map: a cell is a
// stone state when it carries stones, OK once the cells left of it and
// above/below it meet its demand, NEED_ONE otherwise.
std::vector<ColumnState> columnStates(const GridAssignment& a, Variant v);

// Scaled global loss of a complete assignment, summed from per-cell
// waste: influence leaving the grid, stone-on-stone influence and
// over-domination surplus (plus the lone-stone penalty for Roman).
long long assignmentLoss(const GridAssignment& a, Variant v);

// Text rendering: '.' = 0 stones, '#' = 1, '2' = 2; one row per line.
std::string renderAssignment(const GridAssignment& a);
// Witness file: JSON header line {n, m, variant, cost} then the grid.
void writeWitness(std::ostream& out, const GridAssignment& a, Variant v);
GridAssignment parseAssignment(const std::string& text);

}  // namespace griddom
