#pragma once

// Materialises the column-state systems: for a fixed (variant, height)
// the full-grid transfer system (state list, first-cost and dominated
// vectors, transfer relation), and for the border machinery the band
// system (almost-valid states, transition-loss matrix, corner matrix).
//
// The full-grid transfer relation is never stored as a dense matrix;
// successor columns are re-derived on demand, which keeps heights up to
// the documented bounds tractable. Border systems are small (at most a
// few hundred to a thousand states at the default band height) and store
// dense tropical matrices.

#include <cstdint>
#include <functional>
#include <vector>

#include "griddom/tropical.hpp"
#include "griddom/variant.hpp"

namespace griddom {

// Documented height bounds for full-grid transfer systems.
int maxTransferHeight(Variant v);
// Documented band-height bounds for border systems.
int maxBorderHeight(Variant v);

struct TransferSystem {
  Variant variant = Variant::TwoDomination;
  int height = 0;
  int stateCount = 0;
  // Per-state cell labels, stateCount x height, states in ascending
  // canonical-index order.
  std::vector<std::uint8_t> labels;
  std::vector<std::uint64_t> stateIndices;
  TropicalVector firstCost;      // column cost if a first state, inf otherwise
  TropicalVector dominatedMask;  // 0 if dominated, inf otherwise
  TropicalVector columnCosts;    // stones in the column, always finite

  const std::uint8_t* stateLabels(int id) const {
    return labels.data() + static_cast<std::size_t>(id) * height;
  }
  ColumnState state(int id) const;
  // State id of a canonical word index, or -1.
  int stateIdOf(std::uint64_t wordIndex) const;
};

// Enumerates the valid states and fills the vectors. Throws CapacityError
// when the height exceeds the documented bound.
TransferSystem buildTransferSystem(int height, Variant v);

// Invokes fn(wordIndex) for every state compatible after state `id`.
// Word indices are canonical; visit order is lexicographic.
void forEachSuccessorWord(const TransferSystem& sys, int id,
                          const std::function<void(std::uint64_t)>& fn);

// Dense transfer matrix T[s][s2] = cost(s2) when s2 is compatible after
// s. Only sensible for small systems; guarded by an entry cap.
TropicalMatrix denseTransferMatrix(const TransferSystem& sys);

struct BorderSystem {
  Variant variant = Variant::TwoDomination;
  int bandHeight = 0;
  int stateCount = 0;
  std::vector<std::uint8_t> labels;  // stateCount x bandHeight
  std::vector<std::uint64_t> stateIndices;
  TropicalMatrix bandLoss;    // transition losses between band columns
  TropicalMatrix cornerLoss;  // minimum corner losses (input x output)

  const std::uint8_t* stateLabels(int id) const {
    return labels.data() + static_cast<std::size_t>(id) * bandHeight;
  }
  ColumnState state(int id) const;
  int stateIdOf(std::uint64_t wordIndex) const;
};

// Builds the almost-valid state list and the band-loss matrix; fills the
// corner matrix unless withCorner is false. Supported for 2-domination
// and Roman domination.
BorderSystem buildBorderSystem(int bandHeight, Variant v,
                               bool withCorner = true);

// Minimum loss over an h x h corner square for every (input, output)
// state pair: the square's own waste given both neighbours, the output
// column's placement waste, and the waste newly inflicted on the input
// column. Row-by-row dynamic programme over square fills.
TropicalMatrix cornerMatrix(const BorderSystem& sys);

// Reference corner computation by plain enumeration of all square
// fills. Feasible for bandHeight <= 3; used to pin the DP down.
TropicalMatrix cornerMatrixBrute(const BorderSystem& sys);

}  // namespace griddom
