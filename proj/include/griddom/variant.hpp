#pragma once

// Per-variant cell-state alphabets and the predicates that drive the
// column transfer machinery: validity, first-column and dominated-column
// tests, the compatibility relation between consecutive columns, their
// border ("almost") analogues, and per-column cost and per-transition
// loss accounting.
//
// Column words are indexed with row 0 innermost: in a border band, row 0
// is the band row adjacent to the grid interior and row height-1 lies on
// the grid edge. For full-grid columns the orientation is immaterial
// because every rule is symmetric in the word.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace griddom {

enum class Variant { TwoDomination, RomanDomination, ClassicalDomination };

// CLI/config spelling: "2dom" | "roman" | "dom".
Variant variantFromName(const std::string& name);
std::string variantName(Variant v);

// Cell states for the domination variants, in alphabet order.
namespace dom_cell {
inline constexpr std::uint8_t kStone = 0;
inline constexpr std::uint8_t kNeedOne = 1;
inline constexpr std::uint8_t kOk = 2;
}  // namespace dom_cell

// Cell states for Roman domination, in alphabet order.
namespace roman_cell {
inline constexpr std::uint8_t kTwoStones = 0;
inline constexpr std::uint8_t kStone = 1;
inline constexpr std::uint8_t kOk = 2;
inline constexpr std::uint8_t kNeedOne = 3;
}  // namespace roman_cell

int alphabetSize(Variant v);
// Dominators a non-stone cell must accumulate: 2 or 1. Roman demand is 1
// and is handled by the Roman-specific rule paths.
int dominationDemand(Variant v);
// Loss values are stored scaled by this factor (2 keeps Roman losses
// integral).
int lossScale(Variant v);
// Stones carried by a cell in the given state.
int cellCost(Variant v, std::uint8_t label);

// A fixed-height word over the variant alphabet. The canonical index is
// the big-endian mixed-radix value of the cells, so ascending index
// order is lexicographic order on the cells.
class ColumnState {
 public:
  ColumnState() = default;
  explicit ColumnState(int height, std::uint8_t fill = 0)
      : cells_(static_cast<std::size_t>(height), fill) {}
  explicit ColumnState(std::vector<std::uint8_t> cells)
      : cells_(std::move(cells)) {}

  static ColumnState fromIndex(std::uint64_t index, int height, Variant v);
  std::uint64_t index(Variant v) const;

  int height() const { return static_cast<int>(cells_.size()); }
  std::uint8_t operator[](int i) const {
    return cells_[static_cast<std::size_t>(i)];
  }
  std::uint8_t& operator[](int i) {
    return cells_[static_cast<std::size_t>(i)];
  }
  std::span<const std::uint8_t> cells() const { return cells_; }

  friend bool operator==(const ColumnState&, const ColumnState&) = default;

 private:
  std::vector<std::uint8_t> cells_;
};

bool isValidColumn(const ColumnState& s, Variant v);
bool isFirstColumn(const ColumnState& s, Variant v);
bool isDominatedColumn(const ColumnState& s, Variant v);
bool areCompatible(const ColumnState& s, const ColumnState& s2, Variant v);

bool isAlmostValidColumn(const ColumnState& s, Variant v);
bool areAlmostCompatible(const ColumnState& s, const ColumnState& s2,
                         Variant v);
bool isAlmostDominatedColumn(const ColumnState& s, Variant v);

int columnCost(const ColumnState& s, Variant v);

struct BandContext {
  int height = 0;
};

// Scaled loss newly attributable when s2 is appended after s in a band:
// stone-on-stone waste on the interface and inside s2, off-grid influence
// of s2's outermost cell, over-domination that becomes determined at this
// step. Influence facing the grid interior (row 0's inner side) is never
// charged. Throws std::invalid_argument unless the pair is
// almost-compatible.
long long transitionLoss(const ColumnState& s, const ColumnState& s2,
                         const BandContext& ctx, Variant v);

}  // namespace griddom
