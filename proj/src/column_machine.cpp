#include "griddom/column_machine.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "griddom/errors.hpp"
#include "griddom/parallel.hpp"

namespace griddom {

namespace {

namespace dc = dom_cell;
namespace rc = roman_cell;

constexpr std::uint16_t kInf16 = std::numeric_limits<std::uint16_t>::max();

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Enumerates the words accepted by the variant's (almost-)validity rules
// in lexicographic order. Appends labels to `labels` and canonical
// indices to `indices`.
void enumerateWords(int height, Variant v, bool almost,
                    std::vector<std::uint8_t>& labels,
                    std::vector<std::uint64_t>& indices) {
  const int radix = alphabetSize(v);
  const int d = dominationDemand(v);
  const bool roman = v == Variant::RomanDomination;
  std::vector<std::uint8_t> word(static_cast<std::size_t>(height));

  // Vertical-pair admissibility for Roman words (validity is pairwise).
  auto romanPairOk = [](std::uint8_t a, std::uint8_t b) {
    if (a == rc::kNeedOne && b == rc::kTwoStones) return false;
    if (b == rc::kNeedOne && a == rc::kTwoStones) return false;
    if (a == rc::kStone && (b == rc::kStone || b == rc::kTwoStones))
      return false;
    if (b == rc::kStone && a == rc::kTwoStones) return false;
    return true;
  };
  // Window rule for a domination cell once both its neighbours are known.
  auto domCellOk = [&](int i, std::uint8_t lab, int vstones) {
    if (lab == dc::kNeedOne) return vstones <= d - 1;
    if (lab == dc::kOk) {
      if (almost && i == 0) return true;
      return vstones >= d - 1;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == height) {
      if (!roman && height >= 1) {
        const int last = height - 1;
        const int vs = last > 0 && word[last - 1] == dc::kStone ? 1 : 0;
        if (!domCellOk(last, word[last], vs)) return;
      }
      std::uint64_t idx = 0;
      for (int k = 0; k < height; ++k)
        idx = idx * static_cast<std::uint64_t>(radix) + word[k];
      labels.insert(labels.end(), word.begin(), word.end());
      indices.push_back(idx);
      return;
    }
    for (std::uint8_t lab = 0; lab < radix; ++lab) {
      if (roman) {
        if (i > 0 && !romanPairOk(word[i - 1], lab)) continue;
      } else {
        // The cell above is fully windowed once this cell is chosen.
        if (i > 0) {
          const int vs = (i > 1 && word[i - 2] == dc::kStone ? 1 : 0) +
                         (lab == dc::kStone ? 1 : 0);
          if (!domCellOk(i - 1, word[i - 1], vs)) continue;
        }
      }
      word[i] = lab;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
}

int lookupState(const std::vector<std::uint64_t>& indices,
                std::uint64_t wordIndex) {
  auto it = std::lower_bound(indices.begin(), indices.end(), wordIndex);
  if (it == indices.end() || *it != wordIndex) return -1;
  return static_cast<int>(it - indices.begin());
}

}  // namespace

int maxTransferHeight(Variant v) {
  return v == Variant::RomanDomination ? 10 : 14;
}

int maxBorderHeight(Variant v) {
  return v == Variant::RomanDomination ? 6 : 7;
}

ColumnState TransferSystem::state(int id) const {
  const std::uint8_t* p = stateLabels(id);
  return ColumnState(std::vector<std::uint8_t>(p, p + height));
}

int TransferSystem::stateIdOf(std::uint64_t wordIndex) const {
  return lookupState(stateIndices, wordIndex);
}

ColumnState BorderSystem::state(int id) const {
  const std::uint8_t* p = stateLabels(id);
  return ColumnState(std::vector<std::uint8_t>(p, p + bandHeight));
}

int BorderSystem::stateIdOf(std::uint64_t wordIndex) const {
  return lookupState(stateIndices, wordIndex);
}

TransferSystem buildTransferSystem(int height, Variant v) {
  if (height < 1)
    throw std::invalid_argument("buildTransferSystem: height must be >= 1");
  if (height > maxTransferHeight(v))
    throw CapacityError("buildTransferSystem: height " +
                        std::to_string(height) + " exceeds bound " +
                        std::to_string(maxTransferHeight(v)) + " for " +
                        variantName(v));
  TransferSystem sys;
  sys.variant = v;
  sys.height = height;
  enumerateWords(height, v, /*almost=*/false, sys.labels, sys.stateIndices);
  sys.stateCount = static_cast<int>(sys.stateIndices.size());
  sys.firstCost.resize(sys.stateCount);
  sys.dominatedMask.resize(sys.stateCount);
  sys.columnCosts.resize(sys.stateCount);
  for (int s = 0; s < sys.stateCount; ++s) {
    const ColumnState cs = sys.state(s);
    const int cost = columnCost(cs, v);
    sys.columnCosts(s) = TropicalWeight(static_cast<std::uint64_t>(cost));
    sys.firstCost(s) = isFirstColumn(cs, v)
                           ? TropicalWeight(static_cast<std::uint64_t>(cost))
                           : kInf;
    sys.dominatedMask(s) =
        isDominatedColumn(cs, v) ? TropicalWeight(0) : kInf;
  }
  return sys;
}

void forEachSuccessorWord(const TransferSystem& sys, int id,
                          const std::function<void(std::uint64_t)>& fn) {
  const int n = sys.height;
  const int radix = alphabetSize(sys.variant);
  const std::uint8_t* s = sys.stateLabels(id);
  const bool roman = sys.variant == Variant::RomanDomination;
  const int d = dominationDemand(sys.variant);

  std::array<std::uint8_t, 32> x{};
  std::array<std::uint64_t, 33> idx{};
  idx[0] = 0;

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      fn(idx[n]);
      return;
    }
    for (std::uint8_t lab = 0; lab < radix; ++lab) {
      if (roman) {
        if (s[i] == rc::kNeedOne && lab != rc::kTwoStones) continue;
        if ((s[i] == rc::kTwoStones || s[i] == rc::kStone) &&
            lab == rc::kStone)
          continue;
        if (s[i] == rc::kStone && lab == rc::kTwoStones) continue;
        if (lab == rc::kNeedOne && s[i] == rc::kTwoStones) continue;
        if (i > 0) {
          const std::uint8_t prev = x[i - 1];
          if (lab == rc::kNeedOne && prev == rc::kTwoStones) continue;
          if (prev == rc::kNeedOne && lab == rc::kTwoStones) continue;
          if (lab == rc::kStone &&
              (prev == rc::kStone || prev == rc::kTwoStones))
            continue;
          if (prev == rc::kStone && lab == rc::kTwoStones) continue;
          // The cell above now sees its whole window.
          if (prev == rc::kOk) {
            const int cnt = (i > 1 && x[i - 2] == rc::kTwoStones ? 1 : 0) +
                            (lab == rc::kTwoStones ? 1 : 0) +
                            (s[i - 1] == rc::kTwoStones ? 1 : 0);
            if (cnt < 1) continue;
          }
        }
        if (i == n - 1 && lab == rc::kOk) {
          const int cnt = (i > 0 && x[i - 1] == rc::kTwoStones ? 1 : 0) +
                          (s[i] == rc::kTwoStones ? 1 : 0);
          if (cnt < 1) continue;
        }
      } else {
        if (s[i] == dc::kNeedOne && lab != dc::kStone) continue;
        const int partial = (i > 0 && x[i - 1] == dc::kStone ? 1 : 0) +
                            (s[i] == dc::kStone ? 1 : 0);
        if (lab == dc::kNeedOne && partial > d - 1) continue;
        if (lab == dc::kOk && partial + 1 < d) continue;
        if (i > 0) {
          const std::uint8_t prev = x[i - 1];
          const int cnt = (i > 1 && x[i - 2] == dc::kStone ? 1 : 0) +
                          (lab == dc::kStone ? 1 : 0) +
                          (s[i - 1] == dc::kStone ? 1 : 0);
          if (prev == dc::kNeedOne && cnt != d - 1) continue;
          if (prev == dc::kOk && cnt < d) continue;
        }
        if (i == n - 1) {
          const int cnt = (i > 0 && x[i - 1] == dc::kStone ? 1 : 0) +
                          (s[i] == dc::kStone ? 1 : 0);
          if (lab == dc::kNeedOne && cnt != d - 1) continue;
          if (lab == dc::kOk && cnt < d) continue;
        }
      }
      x[i] = lab;
      idx[i + 1] = idx[i] * static_cast<std::uint64_t>(radix) + lab;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
}

TropicalMatrix denseTransferMatrix(const TransferSystem& sys) {
  if (sys.stateCount > 3000)
    throw CapacityError("denseTransferMatrix: " +
                        std::to_string(sys.stateCount) +
                        " states is too large to densify");
  TropicalMatrix t(sys.stateCount, sys.stateCount);
  t.setConstant(kInf);
  for (int s = 0; s < sys.stateCount; ++s) {
    forEachSuccessorWord(sys, s, [&](std::uint64_t w) {
      const int id = sys.stateIdOf(w);
      t(s, id) = sys.columnCosts(id);
    });
  }
  return t;
}

BorderSystem buildBorderSystem(int bandHeight, Variant v, bool withCorner) {
  if (v == Variant::ClassicalDomination)
    throw std::invalid_argument(
        "buildBorderSystem: border loss is supported for 2dom and roman");
  if (bandHeight < 1)
    throw std::invalid_argument("buildBorderSystem: band height must be >= 1");
  if (bandHeight > maxBorderHeight(v))
    throw CapacityError("buildBorderSystem: band height " +
                        std::to_string(bandHeight) + " exceeds bound " +
                        std::to_string(maxBorderHeight(v)) + " for " +
                        variantName(v));
  BorderSystem sys;
  sys.variant = v;
  sys.bandHeight = bandHeight;
  enumerateWords(bandHeight, v, /*almost=*/true, sys.labels,
                 sys.stateIndices);
  sys.stateCount = static_cast<int>(sys.stateIndices.size());

  const int k = sys.stateCount;
  sys.bandLoss.resize(k, k);
  sys.bandLoss.setConstant(kInf);
  const BandContext ctx{bandHeight};
  parallelFor(0, k, [&](std::int64_t a) {
    const ColumnState sa = sys.state(static_cast<int>(a));
    for (int b = 0; b < k; ++b) {
      const ColumnState sb = sys.state(b);
      if (!areAlmostCompatible(sa, sb, v)) continue;
      sys.bandLoss(a, b) = TropicalWeight(
          static_cast<std::uint64_t>(transitionLoss(sa, sb, ctx, v)));
    }
  });

  if (withCorner) sys.cornerLoss = cornerMatrix(sys);
  return sys;
}

// ---------------------------------------------------------------------------
// Corner computation.
//
// Square coordinates: X[r][c] with r aligned to the input column A
// (X[r][0] sits next to A[r]) and c aligned to the output column B
// (X[0][c] sits next to B[c]); both words are indexed innermost-first,
// so r = h-1 and c = h-1 face off-grid. Every square cell is fully
// enclosed by A, B, the square itself and the grid edge, so demands are
// checked exactly. The charge is:
//   - all waste attributed to square cells (pairs, off-grid, surplus),
//   - B's placement waste (its word-internal pairs, outer off-grid,
//     placement surplus and state consistency against the square row),
//   - waste newly inflicted on A (pair halves live with the square side;
//     the extra arrival on an already-covered A cell is charged here).

namespace {

struct CornerShape {
  int h;
  Variant variant;
  int demand;  // domination variants only
};

int fillLevel(Variant v, std::uint8_t stateLabel) {
  if (v == Variant::RomanDomination) {
    if (stateLabel == rc::kTwoStones) return 2;
    if (stateLabel == rc::kStone) return 1;
    return 0;
  }
  return stateLabel == dc::kStone ? 1 : 0;
}

bool romanLevelsClash(int a, int b) {
  return (a == 1 && b >= 1) || (a == 2 && b == 1);
}

// Direct evaluation of one (A, fill, B) triple; the reference semantics.
long long cornerFillCharge(const CornerShape& shape,
                           const std::uint8_t* aLabels,
                           const std::uint8_t* bLabels,
                           const std::vector<std::uint8_t>& fill) {
  const int h = shape.h;
  const Variant v = shape.variant;
  const bool roman = v == Variant::RomanDomination;
  auto at = [&](int r, int c) -> int { return fill[static_cast<std::size_t>(r) * h + c]; };
  auto delivers = [&](int r, int c) -> bool {
    return roman ? at(r, c) == 2 : at(r, c) >= 1;
  };
  const long long kNo = -1;

  long long total = 0;
  // Requirements and extra waste on A.
  for (int r = 0; r < h; ++r) {
    const std::uint8_t al = aLabels[r];
    if (roman) {
      if (al == rc::kNeedOne && r > 0 && at(r, 0) != 2) return kNo;
      if (romanLevelsClash(fillLevel(v, al), at(r, 0))) return kNo;
      if (at(r, 0) == 2 && (al == rc::kTwoStones || al == rc::kOk))
        total += 2;
    } else {
      if (al == dc::kNeedOne && r > 0 && at(r, 0) != 1) return kNo;
      if (al == dc::kStone && at(r, 0) == 1) total += 2;
      if (al == dc::kOk && at(r, 0) == 1) total += 1;
    }
  }
  // Square cells.
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c) {
      const bool left = c > 0 ? delivers(r, c - 1)
                              : fillLevel(v, aLabels[r]) == (roman ? 2 : 1);
      const bool right = c + 1 < h ? delivers(r, c + 1) : false;
      const bool up = r > 0 ? delivers(r - 1, c)
                            : fillLevel(v, bLabels[c]) == (roman ? 2 : 1);
      const bool down = r + 1 < h ? delivers(r + 1, c) : false;
      const int recv = left + right + up + down;
      if (roman) {
        if (c > 0 && romanLevelsClash(at(r, c - 1), at(r, c))) return kNo;
        if (r > 0 && romanLevelsClash(at(r - 1, c), at(r, c))) return kNo;
        const int got = (at(r, c) > 0 ? 1 : 0) + recv;
        if (got < 1) return kNo;
        total += 2 * (got - 1);
        if (at(r, c) == 1) total += 3;
        if (at(r, c) == 2) {
          if (r == h - 1) total += 2;
          if (c == h - 1) total += 2;
        }
      } else {
        if (at(r, c) == 1) {
          if (r == h - 1) total += 1;
          if (c == h - 1) total += 1;
          // Each in-square stone pair is seen from both sides.
          total += (c > 0 && at(r, c - 1) == 1) + (c + 1 < h && at(r, c + 1) == 1) +
                   (r > 0 && at(r - 1, c) == 1) + (r + 1 < h && at(r + 1, c) == 1);
          if (r == 0 && bLabels[c] == dc::kStone) total += 2;
        } else {
          if (recv < shape.demand) return kNo;
          total += recv - shape.demand;
        }
      }
    }
  // B's placement: consistency against the square row plus its own waste.
  for (int c = 0; c < h; ++c) {
    const std::uint8_t bl = bLabels[c];
    if (roman) {
      if (romanLevelsClash(at(0, c), fillLevel(v, bl))) return kNo;
      if (bl == rc::kNeedOne && at(0, c) == 2) return kNo;
      if (bl == rc::kStone) total += 3;
      if (bl == rc::kOk || bl == rc::kTwoStones) {
        const int arr = (bl == rc::kTwoStones ? 1 : 0) + (at(0, c) == 2) +
                        (c > 0 && bLabels[c - 1] == rc::kTwoStones) +
                        (c + 1 < h && bLabels[c + 1] == rc::kTwoStones);
        if (bl == rc::kOk && c > 0 && arr < 1) return kNo;
        if (arr > 1) total += 2 * (arr - 1);
      }
      if (bl == rc::kTwoStones && c == h - 1) total += 2;
    } else {
      const int d = shape.demand;
      if (bl == dc::kStone) {
        if (c + 1 < h && bLabels[c + 1] == dc::kStone) total += 2;
        if (c == h - 1) total += 1;
      } else {
        const int arr = (at(0, c) == 1) +
                        (c > 0 && bLabels[c - 1] == dc::kStone) +
                        (c + 1 < h && bLabels[c + 1] == dc::kStone);
        if (c > 0) {
          if (bl == dc::kOk && arr < d) return kNo;
          if (bl == dc::kNeedOne && arr != d - 1) return kNo;
        } else {
          if (bl == dc::kOk && arr < d - 1) return kNo;
          if (bl == dc::kNeedOne && arr > d - 1) return kNo;
        }
        if (arr > d) total += arr - d;
      }
    }
  }
  return total;
}

}  // namespace

TropicalMatrix cornerMatrixBrute(const BorderSystem& sys) {
  const int h = sys.bandHeight;
  if (h > 3)
    throw CapacityError("cornerMatrixBrute: band height above 3");
  const CornerShape shape{h, sys.variant, dominationDemand(sys.variant)};
  const int levels = sys.variant == Variant::RomanDomination ? 3 : 2;
  const std::uint64_t fills = ipow(static_cast<std::uint64_t>(levels), h * h);
  const int k = sys.stateCount;
  TropicalMatrix ca(k, k);
  ca.setConstant(kInf);
  parallelFor(0, k, [&](std::int64_t a) {
    std::vector<std::uint8_t> fill(static_cast<std::size_t>(h) * h);
    for (int b = 0; b < k; ++b) {
      std::uint64_t best = TropicalWeight::kInfRaw;
      for (std::uint64_t f = 0; f < fills; ++f) {
        std::uint64_t x = f;
        for (int i = 0; i < h * h; ++i) {
          fill[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % levels);
          x /= levels;
        }
        const long long charge =
            cornerFillCharge(shape, sys.stateLabels(static_cast<int>(a)),
                             sys.stateLabels(b), fill);
        if (charge >= 0 && static_cast<std::uint64_t>(charge) < best)
          best = static_cast<std::uint64_t>(charge);
      }
      if (best != TropicalWeight::kInfRaw)
        ca(a, b) = TropicalWeight(best);
    }
  });
  return ca;
}

// ---------------------------------------------------------------------------
// Row-by-row corner DP. Rows of the square are filled top (B side) to
// bottom; the per-row charge tables below are shared across all input
// columns and indexed by the A label at that row, so the per-A sweep is
// pure table lookups.

namespace {

struct RowTables {
  int h = 0;
  int nRows = 0;          // admissible row fills
  int nUp = 0;            // delivery masks (2^h)
  std::vector<std::uint8_t> rowTrits;   // nRows x h, stone level per cell
  std::vector<std::uint16_t> rowDeliver;  // delivery bitmask per row fill
  // charge[aLab][(up*nRows + cur)*nRows + below]
  std::vector<std::vector<std::uint16_t>> mid;
  // charge[aLab][up*nRows + cur] for the last row (below = off-grid)
  std::vector<std::vector<std::uint16_t>> last;
  // charge[aLab][(deliverMaskUp*nRows + cur)*nRows + below] for row 0
  std::vector<std::vector<std::uint16_t>> first;
};

// Resolves one square row against its surroundings: adjacency rules,
// demands and every charge attributed to this row. upLevels is null for
// row 0, whose upstairs neighbour is the output column (adjacency with
// it is checked on the B side). Returns -1 when inadmissible.
int rowResolve(const CornerShape& shape, std::uint8_t aLab,
               const std::uint8_t* upLevels, std::uint16_t upDeliver,
               const std::uint8_t* curLevels, std::uint16_t belowDeliver,
               bool lastRow, bool enforceANeed) {
  const int h = shape.h;
  const bool roman = shape.variant == Variant::RomanDomination;
  const int aLevel = fillLevel(shape.variant, aLab);
  int charge = 0;

  if (roman) {
    if (aLab == rc::kNeedOne && enforceANeed && curLevels[0] != 2) return -1;
    if (romanLevelsClash(aLevel, curLevels[0])) return -1;
    if (curLevels[0] == 2 && (aLab == rc::kTwoStones || aLab == rc::kOk))
      charge += 2;
    for (int c = 0; c < h; ++c) {
      const int f = curLevels[c];
      if (upLevels && romanLevelsClash(upLevels[c], f)) return -1;
      const int recv = (f > 0 ? 1 : 0) + ((upDeliver >> c) & 1) +
                       ((belowDeliver >> c) & 1) +
                       (c > 0 ? curLevels[c - 1] == 2 : aLevel == 2) +
                       (c + 1 < h ? curLevels[c + 1] == 2 : 0);
      if (f == 0 && recv < 1) return -1;
      charge += 2 * (recv - 1);
      if (f == 1) charge += 3;
      if (f == 2) {
        if (c == h - 1) charge += 2;
        if (lastRow) charge += 2;
      }
    }
    return charge;
  }

  if (aLab == dc::kNeedOne && enforceANeed && curLevels[0] != 1) return -1;
  if (aLab == dc::kStone && curLevels[0] == 1) charge += 2;
  if (aLab == dc::kOk && curLevels[0] == 1) charge += 1;
  for (int c = 0; c < h; ++c) {
    if (curLevels[c] == 1) {
      if (c + 1 < h && curLevels[c + 1] == 1) charge += 2;
      if ((upDeliver >> c) & 1) charge += 2;
      if (c == h - 1) charge += 1;
      if (lastRow) charge += 1;
    } else {
      const int recv = ((upDeliver >> c) & 1) + ((belowDeliver >> c) & 1) +
                       (c > 0 ? curLevels[c - 1] : (aLab == dc::kStone)) +
                       (c + 1 < h ? curLevels[c + 1] : 0);
      if (recv < shape.demand) return -1;
      charge += recv - shape.demand;
    }
  }
  return charge;
}

RowTables buildRowTables(const CornerShape& shape) {
  RowTables t;
  const int h = shape.h;
  const bool roman = shape.variant == Variant::RomanDomination;
  t.h = h;
  t.nUp = 1 << h;

  // Admissible row fills: Roman forbids horizontally adjacent lone
  // stones and lone-stone/double-stone pairs.
  const int levels = roman ? 3 : 2;
  std::vector<std::uint8_t> row(static_cast<std::size_t>(h));
  auto gen = [&](auto&& self, int c) -> void {
    if (c == h) {
      t.rowTrits.insert(t.rowTrits.end(), row.begin(), row.end());
      std::uint16_t mask = 0;
      for (int i = 0; i < h; ++i)
        if (row[static_cast<std::size_t>(i)] == (roman ? 2 : 1)) mask |= 1 << i;
      t.rowDeliver.push_back(mask);
      return;
    }
    for (std::uint8_t f = 0; f < levels; ++f) {
      if (roman && c > 0 && romanLevelsClash(row[c - 1], f)) continue;
      row[c] = f;
      self(self, c + 1);
    }
  };
  gen(gen, 0);
  t.nRows = static_cast<int>(t.rowDeliver.size());

  const int labs = roman ? 4 : 3;
  const std::size_t nR = static_cast<std::size_t>(t.nRows);
  t.mid.assign(labs, {});
  t.last.assign(labs, {});
  t.first.assign(labs, {});
  for (int lab = 0; lab < labs; ++lab) {
    auto& mid = t.mid[static_cast<std::size_t>(lab)];
    auto& last = t.last[static_cast<std::size_t>(lab)];
    auto& first = t.first[static_cast<std::size_t>(lab)];
    mid.assign(nR * nR * nR, kInf16);
    last.assign(nR * nR, kInf16);
    first.assign(static_cast<std::size_t>(t.nUp) * nR * nR, kInf16);
    parallelFor(0, t.nRows, [&](std::int64_t up) {
      const std::uint8_t* upLv = &t.rowTrits[static_cast<std::size_t>(up) * h];
      const std::uint16_t upDel = t.rowDeliver[static_cast<std::size_t>(up)];
      for (int cur = 0; cur < t.nRows; ++cur) {
        const std::uint8_t* curLv =
            &t.rowTrits[static_cast<std::size_t>(cur) * h];
        const int lastCharge = rowResolve(
            shape, static_cast<std::uint8_t>(lab), upLv, upDel, curLv, 0,
            /*lastRow=*/true, /*enforceANeed=*/true);
        if (lastCharge >= 0)
          last[static_cast<std::size_t>(up) * nR + cur] =
              static_cast<std::uint16_t>(lastCharge);
        for (int below = 0; below < t.nRows; ++below) {
          const int c = rowResolve(shape, static_cast<std::uint8_t>(lab),
                                   upLv, upDel, curLv,
                                   t.rowDeliver[static_cast<std::size_t>(below)],
                                   /*lastRow=*/false, /*enforceANeed=*/true);
          if (c >= 0)
            mid[(static_cast<std::size_t>(up) * nR + cur) * nR + below] =
                static_cast<std::uint16_t>(c);
        }
      }
    });
    parallelFor(0, t.nUp, [&](std::int64_t up) {
      for (int cur = 0; cur < t.nRows; ++cur) {
        const std::uint8_t* curLv =
            &t.rowTrits[static_cast<std::size_t>(cur) * h];
        for (int below = 0; below < t.nRows; ++below) {
          const int c = rowResolve(shape, static_cast<std::uint8_t>(lab),
                                   nullptr, static_cast<std::uint16_t>(up),
                                   curLv,
                                   t.rowDeliver[static_cast<std::size_t>(below)],
                                   /*lastRow=*/false, /*enforceANeed=*/false);
          if (c >= 0)
            first[(static_cast<std::size_t>(up) * nR + cur) * nR + below] =
                static_cast<std::uint16_t>(c);
        }
      }
    });
  }
  return t;
}

}  // namespace

TropicalMatrix cornerMatrix(const BorderSystem& sys) {
  const int h = sys.bandHeight;
  if (h <= 1) return cornerMatrixBrute(sys);
  const CornerShape shape{h, sys.variant, dominationDemand(sys.variant)};
  const bool roman = sys.variant == Variant::RomanDomination;
  const int k = sys.stateCount;
  const RowTables tables = buildRowTables(shape);
  const std::size_t nR = static_cast<std::size_t>(tables.nRows);

  // B-side placement cost against each candidate top row, independent of A.
  std::vector<std::uint32_t> bCost(static_cast<std::size_t>(k) * nR,
                                   std::numeric_limits<std::uint32_t>::max());
  std::vector<std::uint16_t> bDeliver(static_cast<std::size_t>(k), 0);
  parallelFor(0, k, [&](std::int64_t b) {
    const std::uint8_t* bl = sys.stateLabels(static_cast<int>(b));
    std::uint16_t mask = 0;
    for (int c = 0; c < h; ++c)
      if (fillLevel(sys.variant, bl[c]) == (roman ? 2 : 1)) mask |= 1 << c;
    bDeliver[static_cast<std::size_t>(b)] = mask;
    for (std::size_t m0 = 0; m0 < nR; ++m0) {
      const std::uint8_t* row = &tables.rowTrits[m0 * h];
      long long charge = 0;
      bool ok = true;
      for (int c = 0; c < h && ok; ++c) {
        const std::uint8_t lab = bl[c];
        if (roman) {
          if (romanLevelsClash(row[c], fillLevel(sys.variant, lab))) ok = false;
          if (lab == rc::kNeedOne && row[c] == 2) ok = false;
          if (!ok) break;
          if (lab == rc::kStone) charge += 3;
          if (lab == rc::kOk || lab == rc::kTwoStones) {
            const int arr = (lab == rc::kTwoStones ? 1 : 0) + (row[c] == 2) +
                            (c > 0 && bl[c - 1] == rc::kTwoStones) +
                            (c + 1 < h && bl[c + 1] == rc::kTwoStones);
            if (lab == rc::kOk && c > 0 && arr < 1) { ok = false; break; }
            if (arr > 1) charge += 2 * (arr - 1);
          }
          if (lab == rc::kTwoStones && c == h - 1) charge += 2;
        } else {
          const int d = shape.demand;
          if (lab == dc::kStone) {
            if (c + 1 < h && bl[c + 1] == dc::kStone) charge += 2;
            if (c == h - 1) charge += 1;
          } else {
            const int arr = (row[c] == 1) +
                            (c > 0 && bl[c - 1] == dc::kStone) +
                            (c + 1 < h && bl[c + 1] == dc::kStone);
            if (c > 0) {
              if (lab == dc::kOk && arr < d) { ok = false; break; }
              if (lab == dc::kNeedOne && arr != d - 1) { ok = false; break; }
            } else {
              if (lab == dc::kOk && arr < d - 1) { ok = false; break; }
              if (lab == dc::kNeedOne && arr > d - 1) { ok = false; break; }
            }
            if (arr > d) charge += arr - d;
          }
        }
      }
      if (ok)
        bCost[static_cast<std::size_t>(b) * nR + m0] =
            static_cast<std::uint32_t>(charge);
    }
  });

  TropicalMatrix ca(k, k);
  ca.setConstant(kInf);
  constexpr std::uint32_t kBig = std::numeric_limits<std::uint32_t>::max();

  parallelFor(0, k, [&](std::int64_t a) {
    const std::uint8_t* al = sys.stateLabels(static_cast<int>(a));
    // Backward sweep over square rows. V[(up, cur)] = best completion of
    // rows r..h-1 given rows r-1 (up) and r (cur).
    std::vector<std::uint32_t> vCur(nR * nR, kBig), vNext(nR * nR, kBig);
    {
      const auto& lastT = tables.last[al[h - 1]];
      for (std::size_t i = 0; i < nR * nR; ++i)
        vCur[i] = lastT[i] == kInf16 ? kBig : lastT[i];
    }
    for (int r = h - 2; r >= 1; --r) {
      const auto& midT = tables.mid[al[r]];
      for (std::size_t up = 0; up < nR; ++up)
        for (std::size_t cur = 0; cur < nR; ++cur) {
          std::uint32_t best = kBig;
          const std::uint16_t* rowT = &midT[(up * nR + cur) * nR];
          const std::uint32_t* vRow = &vCur[cur * nR];
          for (std::size_t below = 0; below < nR; ++below) {
            if (rowT[below] == kInf16 || vRow[below] == kBig) continue;
            const std::uint32_t cand = rowT[below] + vRow[below];
            if (cand < best) best = cand;
          }
          vNext[up * nR + cur] = best;
        }
      std::swap(vCur, vNext);
    }
    // Fold in row 0, which sees B's deliveries from above.
    const auto& firstT = tables.first[al[0]];
    std::vector<std::uint32_t> rest(static_cast<std::size_t>(tables.nUp) * nR,
                                    kBig);
    for (int up = 0; up < tables.nUp; ++up)
      for (std::size_t m0 = 0; m0 < nR; ++m0) {
        std::uint32_t best = kBig;
        const std::uint16_t* rowT =
            &firstT[(static_cast<std::size_t>(up) * nR + m0) * nR];
        const std::uint32_t* vRow = &vCur[m0 * nR];
        for (std::size_t m1 = 0; m1 < nR; ++m1) {
          if (rowT[m1] == kInf16 || vRow[m1] == kBig) continue;
          const std::uint32_t cand = rowT[m1] + vRow[m1];
          if (cand < best) best = cand;
        }
        rest[static_cast<std::size_t>(up) * nR + m0] = best;
      }
    for (int b = 0; b < k; ++b) {
      const std::uint32_t* bc = &bCost[static_cast<std::size_t>(b) * nR];
      const std::uint32_t* re =
          &rest[static_cast<std::size_t>(bDeliver[static_cast<std::size_t>(b)]) * nR];
      std::uint32_t best = kBig;
      for (std::size_t m0 = 0; m0 < nR; ++m0) {
        if (bc[m0] == kBig || re[m0] == kBig) continue;
        const std::uint32_t cand = bc[m0] + re[m0];
        if (cand < best) best = cand;
      }
      if (best != kBig) ca(a, b) = TropicalWeight(best);
    }
  });
  return ca;
}

}  // namespace griddom
