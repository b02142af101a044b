#include "griddom/oracle.hpp"

#include "griddom/errors.hpp"

namespace griddom {

namespace {

struct Search {
  int rows, cols;
  Variant variant;
  int demand;         // dominators an empty cell must see (Roman: 1 * level-2)
  int maxLabel;       // 1 for domination variants, 2 for Roman
  std::vector<std::uint8_t> cells;
  long long cost = 0;
  long long best;
  std::vector<std::uint8_t> bestCells;

  Search(int n, int m, Variant v)
      : rows(n), cols(m), variant(v),
        demand(v == Variant::RomanDomination ? 1 : dominationDemand(v)),
        maxLabel(v == Variant::RomanDomination ? 2 : 1),
        cells(static_cast<std::size_t>(n) * m, 0) {
    // All-stones (Roman: all single stones) is always dominating.
    best = static_cast<long long>(n) * m;
    bestCells.assign(cells.size(), 1);
  }

  std::uint8_t at(int r, int c) const {
    return cells[static_cast<std::size_t>(c) * rows + r];
  }
  bool inside(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }

  bool dominatesSelf(std::uint8_t s) const { return s > 0; }

  // Dominators a decided empty cell receives from its decided neighbours.
  int received(int r, int c) const {
    const std::uint8_t lvl = variant == Variant::RomanDomination ? 2 : 1;
    int cnt = 0;
    cnt += inside(r - 1, c) && at(r - 1, c) >= lvl;
    cnt += inside(r + 1, c) && at(r + 1, c) >= lvl;
    cnt += inside(r, c - 1) && at(r, c - 1) >= lvl;
    cnt += inside(r, c + 1) && at(r, c + 1) >= lvl;
    return cnt;
  }

  bool cellSatisfied(int r, int c) const {
    if (dominatesSelf(at(r, c))) return true;
    return received(r, c) >= demand;
  }

  void run(int idx) {
    if (idx == rows * cols) {
      // Cells in the last column have only now had all neighbours fixed.
      for (int r = 0; r < rows; ++r)
        if (!cellSatisfied(r, cols - 1)) return;
      if (cost < best) {
        best = cost;
        bestCells = cells;
      }
      return;
    }
    const int c = idx / rows;
    const int r = idx % rows;
    for (std::uint8_t lab = 0; lab <= maxLabel; ++lab) {
      cells[static_cast<std::size_t>(idx)] = lab;
      cost += lab;
      if (cost < best) {
        // (c-1, r) is now fully surrounded; an unmet demand there can
        // never be repaired.
        if (c == 0 || cellSatisfied(r, c - 1)) run(idx + 1);
      }
      cost -= lab;
    }
    cells[static_cast<std::size_t>(idx)] = 0;
  }
};

}  // namespace

OracleResult bruteForceMin(int n, int m, Variant v) {
  if (n < 1 || m < 1) throw std::invalid_argument("bruteForceMin: empty grid");
  const long long area = static_cast<long long>(n) * m;
  const long long cap = v == Variant::RomanDomination ? 14 : 24;
  if (area > cap)
    throw CapacityError("bruteForceMin: " + std::to_string(area) +
                        " cells exceeds cap " + std::to_string(cap));
  Search search(n, m, v);
  search.run(0);
  OracleResult out;
  out.value = search.best;
  out.witness = GridAssignment(n, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < n; ++r)
      out.witness.set(r, c, search.bestCells[static_cast<std::size_t>(c) * n + r]);
  return out;
}

}  // namespace griddom
