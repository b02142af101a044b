#include "griddom/variant.hpp"

#include <stdexcept>

namespace griddom {

namespace {

namespace dc = dom_cell;
namespace rc = roman_cell;

// Stones among the in-word vertical neighbours of position i.
int verticalStones(const ColumnState& s, int i, std::uint8_t stoneLabel) {
  int n = s.height();
  return (i > 0 && s[i - 1] == stoneLabel) +
         (i + 1 < n && s[i + 1] == stoneLabel);
}

// Stones among {s2[i-1], s2[i+1], s[i]}: everything a cell of the
// appended column can see except the column after it.
int visibleStones(const ColumnState& s, const ColumnState& s2, int i,
                  std::uint8_t stoneLabel) {
  return verticalStones(s2, i, stoneLabel) + (s[i] == stoneLabel ? 1 : 0);
}

}  // namespace

Variant variantFromName(const std::string& name) {
  if (name == "2dom") return Variant::TwoDomination;
  if (name == "roman") return Variant::RomanDomination;
  if (name == "dom") return Variant::ClassicalDomination;
  throw std::invalid_argument("unknown variant: " + name +
                              " (expected 2dom, roman or dom)");
}

std::string variantName(Variant v) {
  switch (v) {
    case Variant::TwoDomination: return "2dom";
    case Variant::RomanDomination: return "roman";
    case Variant::ClassicalDomination: return "dom";
  }
  return "?";
}

int alphabetSize(Variant v) {
  return v == Variant::RomanDomination ? 4 : 3;
}

int dominationDemand(Variant v) {
  switch (v) {
    case Variant::TwoDomination: return 2;
    case Variant::ClassicalDomination: return 1;
    case Variant::RomanDomination: return 1;
  }
  return 0;
}

int lossScale(Variant v) { return v == Variant::RomanDomination ? 2 : 1; }

int cellCost(Variant v, std::uint8_t label) {
  if (v == Variant::RomanDomination) {
    if (label == rc::kTwoStones) return 2;
    if (label == rc::kStone) return 1;
    return 0;
  }
  return label == dc::kStone ? 1 : 0;
}

ColumnState ColumnState::fromIndex(std::uint64_t index, int height,
                                   Variant v) {
  const std::uint64_t radix = static_cast<std::uint64_t>(alphabetSize(v));
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(height));
  for (int i = height - 1; i >= 0; --i) {
    cells[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(index % radix);
    index /= radix;
  }
  if (index != 0)
    throw std::invalid_argument("ColumnState::fromIndex: index out of range");
  return ColumnState(std::move(cells));
}

std::uint64_t ColumnState::index(Variant v) const {
  const std::uint64_t radix = static_cast<std::uint64_t>(alphabetSize(v));
  std::uint64_t idx = 0;
  for (std::uint8_t c : cells_) idx = idx * radix + c;
  return idx;
}

bool isValidColumn(const ColumnState& s, Variant v) {
  const int n = s.height();
  if (v == Variant::RomanDomination) {
    for (int i = 0; i < n; ++i) {
      const int tNbrs = verticalStones(s, i, rc::kTwoStones);
      if (s[i] == rc::kNeedOne && tNbrs > 0) return false;
      if (s[i] == rc::kStone &&
          (tNbrs > 0 || verticalStones(s, i, rc::kStone) > 0))
        return false;
    }
    return true;
  }
  const int d = dominationDemand(v);
  for (int i = 0; i < n; ++i) {
    const int vs = verticalStones(s, i, dc::kStone);
    if (s[i] == dc::kNeedOne && vs > d - 1) return false;
    if (s[i] == dc::kOk && vs < d - 1) return false;
  }
  return true;
}

bool isFirstColumn(const ColumnState& s, Variant v) {
  const int n = s.height();
  if (v == Variant::RomanDomination) {
    if (!isValidColumn(s, v)) return false;
    for (int i = 0; i < n; ++i)
      if (s[i] == rc::kOk && verticalStones(s, i, rc::kTwoStones) < 1)
        return false;
    return true;
  }
  const int d = dominationDemand(v);
  for (int i = 0; i < n; ++i) {
    const int vs = verticalStones(s, i, dc::kStone);
    if (s[i] == dc::kNeedOne && vs != d - 1) return false;
    if (s[i] == dc::kOk && vs < d) return false;
  }
  return true;
}

bool isDominatedColumn(const ColumnState& s, Variant v) {
  const std::uint8_t need =
      v == Variant::RomanDomination ? rc::kNeedOne : dc::kNeedOne;
  for (int i = 0; i < s.height(); ++i)
    if (s[i] == need) return false;
  return true;
}

bool areCompatible(const ColumnState& s, const ColumnState& s2, Variant v) {
  const int n = s.height();
  if (s2.height() != n) return false;
  if (v == Variant::RomanDomination) {
    for (int i = 0; i < n; ++i) {
      if (s[i] == rc::kNeedOne && s2[i] != rc::kTwoStones) return false;
      if (s2[i] == rc::kNeedOne && s[i] == rc::kTwoStones) return false;
      if (s2[i] == rc::kOk && visibleStones(s, s2, i, rc::kTwoStones) < 1)
        return false;
      if ((s[i] == rc::kTwoStones || s[i] == rc::kStone) &&
          s2[i] == rc::kStone)
        return false;
      if (s[i] == rc::kStone && s2[i] == rc::kTwoStones) return false;
    }
    return true;
  }
  const int d = dominationDemand(v);
  for (int i = 0; i < n; ++i) {
    if (s[i] == dc::kNeedOne && s2[i] != dc::kStone) return false;
    const int cnt = visibleStones(s, s2, i, dc::kStone);
    if (s2[i] == dc::kNeedOne && cnt != d - 1) return false;
    if (s2[i] == dc::kOk && cnt < d) return false;
  }
  return true;
}

bool isAlmostValidColumn(const ColumnState& s, Variant v) {
  if (v == Variant::RomanDomination) return isValidColumn(s, v);
  const int n = s.height();
  const int d = dominationDemand(v);
  for (int i = 0; i < n; ++i) {
    const int vs = verticalStones(s, i, dc::kStone);
    if (s[i] == dc::kNeedOne && vs > d - 1) return false;
    if (s[i] == dc::kOk && i != 0 && vs < d - 1) return false;
  }
  return true;
}

bool areAlmostCompatible(const ColumnState& s, const ColumnState& s2,
                         Variant v) {
  const int n = s.height();
  if (s2.height() != n) return false;
  if (v == Variant::RomanDomination) {
    for (int i = 0; i < n; ++i) {
      if (s[i] == rc::kNeedOne && i != 0 && s2[i] != rc::kTwoStones)
        return false;
      if (s2[i] == rc::kNeedOne && s[i] == rc::kTwoStones) return false;
      if (s2[i] == rc::kOk && i != 0 &&
          visibleStones(s, s2, i, rc::kTwoStones) < 1)
        return false;
      if ((s[i] == rc::kTwoStones || s[i] == rc::kStone) &&
          s2[i] == rc::kStone)
        return false;
      if (s[i] == rc::kStone && s2[i] == rc::kTwoStones) return false;
    }
    return true;
  }
  const int d = dominationDemand(v);
  for (int i = 0; i < n; ++i) {
    if (s[i] == dc::kNeedOne && i != 0 && s2[i] != dc::kStone) return false;
    const int cnt = visibleStones(s, s2, i, dc::kStone);
    if (s2[i] == dc::kNeedOne) {
      if (i != 0 && cnt != d - 1) return false;
      if (i == 0 && cnt > d - 1) return false;
    }
    if (s2[i] == dc::kOk) {
      if (i != 0 && cnt < d) return false;
      if (i == 0 && cnt < d - 1) return false;
    }
  }
  return true;
}

bool isAlmostDominatedColumn(const ColumnState& s, Variant v) {
  const std::uint8_t need =
      v == Variant::RomanDomination ? rc::kNeedOne : dc::kNeedOne;
  for (int i = 1; i < s.height(); ++i)
    if (s[i] == need) return false;
  return true;
}

int columnCost(const ColumnState& s, Variant v) {
  int c = 0;
  for (int i = 0; i < s.height(); ++i) c += cellCost(v, s[i]);
  return c;
}

long long transitionLoss(const ColumnState& s, const ColumnState& s2,
                         const BandContext& ctx, Variant v) {
  const int h = ctx.height;
  if (s.height() != h || s2.height() != h)
    throw std::invalid_argument("transitionLoss: height mismatch");
  if (!areAlmostCompatible(s, s2, v))
    throw std::invalid_argument("transitionLoss: states not compatible");

  long long loss = 0;
  if (v == Variant::RomanDomination) {
    for (int i = 0; i < h; ++i) {
      const std::uint8_t x = s2[i];
      if (x == rc::kStone) {
        loss += 3;  // lone stone: 2 * 3/2
        continue;
      }
      if (x != rc::kNeedOne) {
        // Arrivals visible once s2 is placed; the column after s2 may
        // still add one and is charged then.
        const int arr = (x == rc::kTwoStones ? 1 : 0) +
                        (s[i] == rc::kTwoStones ? 1 : 0) +
                        (i > 0 && s2[i - 1] == rc::kTwoStones ? 1 : 0) +
                        (i + 1 < h && s2[i + 1] == rc::kTwoStones ? 1 : 0);
        if (arr > 1) loss += 2 * (arr - 1);
      }
      if (x == rc::kTwoStones) {
        if (i == h - 1) loss += 2;  // influence past the grid edge
        if (s[i] == rc::kTwoStones || s[i] == rc::kOk) loss += 2;
      }
    }
    return loss;
  }

  const int d = dominationDemand(v);
  for (int i = 0; i < h; ++i) {
    if (s2[i] == dc::kStone) {
      if (i + 1 < h && s2[i + 1] == dc::kStone) loss += 2;
      if (s[i] == dc::kStone) loss += 2;
      if (i == h - 1) loss += 1;  // influence past the grid edge
      if (s[i] == dc::kOk) loss += 1;  // arrival on an already-covered cell
    } else {
      const int cnt = (s[i] == dc::kStone ? 1 : 0) +
                      (i > 0 && s2[i - 1] == dc::kStone ? 1 : 0) +
                      (i + 1 < h && s2[i + 1] == dc::kStone ? 1 : 0);
      if (cnt > d) loss += cnt - d;
    }
  }
  return loss;
}

}  // namespace griddom
