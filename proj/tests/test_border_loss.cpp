#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <cstdlib>
#include <filesystem>

#include "griddom/border_loss.hpp"
#include "griddom/cache.hpp"
#include "griddom/errors.hpp"
#include "griddom/fixed_height.hpp"

using namespace griddom;

TEST_CASE("band power addition law") {
  const BorderSystem sys = buildBorderSystem(2, Variant::TwoDomination,
                                             /*withCorner=*/false);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const std::uint64_t a = rng() % 7, b = rng() % 7;
    CHECK(matEquals(matPow(sys.bandLoss, a + b),
                    matMul(matPow(sys.bandLoss, a), matPow(sys.bandLoss, b))));
  }
}

TEST_CASE("border bound is sound against exact values at small band height") {
  // Every loss relaxation must stay below the exact minimum loss, i.e.
  // the induced bound below the true domination number.
  for (int h = 1; h <= 2; ++h) {
    for (Variant v : {Variant::TwoDomination, Variant::RomanDomination}) {
      const BorderSystem sys = buildBorderSystem(h, v);
      BorderEvaluator eval(sys);
      const int top = v == Variant::RomanDomination ? 8 : 9;
      for (int n = 2 * h + 1; n <= top; ++n) {
        TransferSystem ts = buildTransferSystem(n, v);
        const auto exact = dominationNumberRow(ts, top);
        for (int m = n; m <= top; ++m)
          CHECK(eval.dominationLowerBound(n, m) <=
                exact[static_cast<std::size_t>(m - 1)]);
      }
    }
  }
}

TEST_CASE("size guard") {
  const BorderSystem sys = buildBorderSystem(2, Variant::TwoDomination);
  BorderEvaluator eval(sys);
  CHECK_THROWS_AS(eval.minBorderLoss(4, 9), std::invalid_argument);
}

TEST_CASE("full-height 2-domination border values") {
  const BorderSystem sys = buildBorderSystem(6, Variant::TwoDomination);
  BorderEvaluator eval(sys);
  CHECK(eval.minBorderLoss(13, 13) == 76);
  CHECK(eval.dominationLowerBound(13, 13) == 69);
  CHECK(eval.dominationLowerBound(13, 14) == 74);
  CHECK(eval.dominationLowerBound(14, 14) == 79);  // floor(16*16/3) - 6
}

TEST_CASE("loss periodicity certifies itself and extends the bound") {
  const BorderSystem sys = buildBorderSystem(2, Variant::TwoDomination);
  BorderEvaluator eval(sys);
  const LossPeriodicity per = eval.lossPeriodicity(128);
  CHECK(per.k >= 1);
  // The power sequence really repeats with the claimed shift.
  const TropicalMatrix base = matPow(sys.bandLoss, static_cast<std::uint64_t>(per.r0));
  const TropicalMatrix next =
      matPow(sys.bandLoss, static_cast<std::uint64_t>(per.r0 + per.k));
  CHECK(shiftEquals(base, next,
                    TropicalWeight(static_cast<std::uint64_t>(per.p))));
  // Far past the preperiod the periodic route equals direct powers.
  for (int n = 5; n <= 8; ++n)
    for (int m = n; m <= 40; m += 7)
      CHECK(eval.minBorderLossPeriodic(n, m) == eval.minBorderLoss(n, m));
}

TEST_CASE("border system disk cache round-trips") {
  const std::string dir =
      (std::filesystem::temp_directory_path() / "griddom-cache-test").string();
  std::filesystem::create_directories(dir);
  const BorderSystem built = buildBorderSystem(2, Variant::TwoDomination);
  saveBorderSystem(dir, built);
  const auto loaded = loadBorderSystem(dir, 2, Variant::TwoDomination);
  REQUIRE(loaded.has_value());
  CHECK(matEquals(loaded->bandLoss, built.bandLoss));
  CHECK(matEquals(loaded->cornerLoss, built.cornerLoss));
  CHECK_FALSE(loadBorderSystem(dir, 3, Variant::TwoDomination).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("band-height-13 exact values dominate the border bound" *
          doctest::skip(std::getenv("GRIDDOM_SLOW_TESTS") == nullptr)) {
  const BorderSystem sys = buildBorderSystem(6, Variant::TwoDomination);
  BorderEvaluator eval(sys);
  TransferSystem ts = buildTransferSystem(13, Variant::TwoDomination);
  const auto exact = dominationNumberRow(ts, 16);
  for (int m = 13; m <= 16; ++m) {
    CHECK(eval.dominationLowerBound(13, m) <=
          exact[static_cast<std::size_t>(m - 1)]);
    // Sharp on this window: the bound meets the exact value.
    CHECK(eval.dominationLowerBound(13, m) ==
          exact[static_cast<std::size_t>(m - 1)]);
  }
}

TEST_CASE("Roman border bound at full height") {
  const BorderSystem sys = buildBorderSystem(6, Variant::RomanDomination);
  BorderEvaluator eval(sys);
  CHECK(eval.dominationLowerBound(14, 14) == 88);
}
