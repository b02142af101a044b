#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "griddom/column_machine.hpp"
#include "griddom/errors.hpp"
#include "griddom/grid.hpp"

using namespace griddom;
namespace dc = griddom::dom_cell;
namespace rc = griddom::roman_cell;

namespace {

// Column images of every dominating assignment, collected definitionally:
// the extensional characterisation of the state sets and the relation.
struct ExtensionalSets {
  std::set<std::uint64_t> valid, first, dominated;
  std::set<std::pair<std::uint64_t, std::uint64_t>> compatible;
};

ExtensionalSets collectImages(int n, int mTop, Variant v) {
  ExtensionalSets sets;
  const int levels = v == Variant::RomanDomination ? 3 : 2;
  for (int m = 1; m <= mTop; ++m) {
    GridAssignment g(n, m);
    const int cells = n * m;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(levels);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = code;
      for (int i = 0; i < cells; ++i) {
        g.stones[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(x % levels);
        x /= static_cast<std::uint64_t>(levels);
      }
      if (!isDominating(g, v)) continue;
      if (v == Variant::RomanDomination) {
        // The transfer machinery works on the pruned state space; skip
        // assignments outside it (an equal-cost pruned twin exists).
        bool pruned = false;
        for (int r = 0; r < n && !pruned; ++r)
          for (int c = 0; c < m && !pruned; ++c)
            if (g.at(r, c) == 1 &&
                ((g.inside(r + 1, c) && g.at(r + 1, c) >= 1) ||
                 (g.inside(r, c + 1) && g.at(r, c + 1) >= 1) ||
                 (g.inside(r - 1, c) && g.at(r - 1, c) == 2) ||
                 (g.inside(r, c - 1) && g.at(r, c - 1) == 2)))
              pruned = true;
        if (pruned) continue;
      }
      const auto states = columnStates(g, v);
      for (int c = 0; c < m; ++c) {
        const std::uint64_t idx = states[static_cast<std::size_t>(c)].index(v);
        sets.valid.insert(idx);
        if (c == 0) sets.first.insert(idx);
        if (c == m - 1) sets.dominated.insert(idx);
        if (c + 1 < m)
          sets.compatible.insert(
              {idx, states[static_cast<std::size_t>(c + 1)].index(v)});
      }
    }
  }
  return sets;
}

}  // namespace

TEST_CASE("tiny transfer systems") {
  const TransferSystem sys = buildTransferSystem(1, Variant::TwoDomination);
  CHECK(sys.stateCount == 2);
  int finiteFirst = 0;
  for (int s = 0; s < sys.stateCount; ++s)
    if (!sys.firstCost(s).isInf()) ++finiteFirst;
  CHECK(finiteFirst == 1);
  CHECK(sys.state(0)[0] == dc::kStone);
  // The lone unresolved cell can never see its "exactly one" stone.
  const int needId = sys.stateIdOf(
      ColumnState(std::vector<std::uint8_t>{dc::kNeedOne})
          .index(Variant::TwoDomination));
  REQUIRE(needId >= 0);
  CHECK(sys.firstCost(needId).isInf());
  CHECK(sys.firstCost(0) == TropicalWeight(1));

  // Adjacent lone stones are pruned out of the Roman state space.
  const TransferSystem roman = buildTransferSystem(2, Variant::RomanDomination);
  const ColumnState ss(std::vector<std::uint8_t>{rc::kStone, rc::kStone});
  CHECK(roman.stateIdOf(ss.index(Variant::RomanDomination)) == -1);
}

TEST_CASE("intensional rules match the extensional definition") {
  struct Range { Variant v; int nTop; int mTop; };
  // Roman enumeration is 3^(n*m); keep its window small.
  for (const Range range : {Range{Variant::TwoDomination, 5, 5},
                            Range{Variant::ClassicalDomination, 5, 5},
                            Range{Variant::RomanDomination, 3, 4}}) {
    for (int n = 1; n <= range.nTop; ++n) {
      const ExtensionalSets sets = collectImages(n, range.mTop, range.v);
      const TransferSystem sys = buildTransferSystem(n, range.v);
      // Every collected image is a state with the right flags.
      for (std::uint64_t idx : sets.valid)
        CHECK(sys.stateIdOf(idx) >= 0);
      for (std::uint64_t idx : sets.first)
        CHECK_FALSE(sys.firstCost(sys.stateIdOf(idx)).isInf());
      for (std::uint64_t idx : sets.dominated)
        CHECK_FALSE(sys.dominatedMask(sys.stateIdOf(idx)).isInf());
      for (auto [a, b] : sets.compatible)
        CHECK(areCompatible(sys.state(sys.stateIdOf(a)),
                            sys.state(sys.stateIdOf(b)), range.v));
      // And conversely for the window that small grids can exhibit.
      for (int s = 0; s < sys.stateCount; ++s) {
        const std::uint64_t idx = sys.stateIndices[static_cast<std::size_t>(s)];
        CHECK(sets.valid.count(idx) == 1);
        if (!sys.firstCost(s).isInf()) CHECK(sets.first.count(idx) == 1);
        if (!sys.dominatedMask(s).isInf())
          CHECK(sets.dominated.count(idx) == 1);
      }
    }
  }
}

TEST_CASE("transfer entries align with the predicates") {
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination}) {
    const TransferSystem sys = buildTransferSystem(3, v);
    const TropicalMatrix t = denseTransferMatrix(sys);
    for (int a = 0; a < sys.stateCount; ++a)
      for (int b = 0; b < sys.stateCount; ++b) {
        const bool compatible = areCompatible(sys.state(a), sys.state(b), v);
        CHECK(t(a, b).isInf() != compatible);
        if (compatible)
          CHECK(t(a, b) ==
                TropicalWeight(static_cast<std::uint64_t>(
                    columnCost(sys.state(b), v))));
      }
  }
}

TEST_CASE("state enumeration is deterministic and sorted") {
  const TransferSystem a = buildTransferSystem(6, Variant::TwoDomination);
  const TransferSystem b = buildTransferSystem(6, Variant::TwoDomination);
  CHECK(a.stateIndices == b.stateIndices);
  CHECK(a.labels == b.labels);
  CHECK(std::is_sorted(a.stateIndices.begin(), a.stateIndices.end()));
}

TEST_CASE("capacity guards") {
  CHECK_THROWS_AS(buildTransferSystem(15, Variant::TwoDomination),
                  CapacityError);
  CHECK_THROWS_AS(buildTransferSystem(11, Variant::RomanDomination),
                  CapacityError);
  CHECK_THROWS_AS(buildTransferSystem(0, Variant::TwoDomination),
                  std::invalid_argument);
  CHECK_THROWS_AS(buildBorderSystem(8, Variant::TwoDomination),
                  CapacityError);
  CHECK_THROWS_AS(buildBorderSystem(3, Variant::ClassicalDomination),
                  std::invalid_argument);
}

TEST_CASE("border state spaces") {
  const BorderSystem b6 = buildBorderSystem(6, Variant::TwoDomination,
                                            /*withCorner=*/false);
  CHECK(b6.stateCount <= 729);
  CHECK(b6.stateCount > 0);

  // Roman border states coincide with the plain valid states.
  const BorderSystem rb = buildBorderSystem(4, Variant::RomanDomination,
                                            /*withCorner=*/false);
  const TransferSystem rt = buildTransferSystem(4, Variant::RomanDomination);
  CHECK(rb.stateIndices == rt.stateIndices);
}

TEST_CASE("band matrix infinities follow almost-compatibility") {
  const BorderSystem sys = buildBorderSystem(3, Variant::TwoDomination,
                                             /*withCorner=*/false);
  const BandContext ctx{3};
  for (int a = 0; a < sys.stateCount; ++a)
    for (int b = 0; b < sys.stateCount; ++b) {
      const bool ok = areAlmostCompatible(sys.state(a), sys.state(b),
                                          Variant::TwoDomination);
      CHECK(sys.bandLoss(a, b).isInf() != ok);
      if (ok)
        CHECK(sys.bandLoss(a, b) ==
              TropicalWeight(static_cast<std::uint64_t>(transitionLoss(
                  sys.state(a), sys.state(b), ctx, Variant::TwoDomination))));
    }
}

TEST_CASE("corner DP equals the brute-force corner") {
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination}) {
    for (int h = 1; h <= 3; ++h) {
      const BorderSystem sys = buildBorderSystem(h, v, /*withCorner=*/false);
      const TropicalMatrix dp = cornerMatrix(sys);
      const TropicalMatrix brute = cornerMatrixBrute(sys);
      CHECK(matEquals(dp, brute));
    }
  }
}

TEST_CASE("corner entries are non-negative and sometimes finite") {
  const BorderSystem sys = buildBorderSystem(2, Variant::TwoDomination);
  bool anyFinite = false;
  for (int a = 0; a < sys.stateCount; ++a)
    for (int b = 0; b < sys.stateCount; ++b)
      if (!sys.cornerLoss(a, b).isInf()) anyFinite = true;
  CHECK(anyFinite);
}
