#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "griddom/errors.hpp"
#include "griddom/fixed_height.hpp"
#include "griddom/oracle.hpp"
#include "reference_dp.hpp"

using namespace griddom;

TEST_CASE("pinned exact values") {
  CHECK(dominationNumber(1, 1, Variant::TwoDomination) == 1);
  CHECK(dominationNumber(1, 5, Variant::TwoDomination) == 3);
  CHECK(dominationNumber(4, 8, Variant::TwoDomination) == 15);
  CHECK(dominationNumber(3, 3, Variant::TwoDomination) == 4);
  CHECK(dominationNumber(2, 5, Variant::RomanDomination) == 6);
}

TEST_CASE("solver equals the oracle on every in-cap grid") {
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination,
                    Variant::ClassicalDomination}) {
    const long long cap = v == Variant::RomanDomination ? 12 : 18;
    for (int n = 1; static_cast<long long>(n) * n <= cap; ++n) {
      TransferSystem sys = buildTransferSystem(n, v);
      const int mTop = static_cast<int>(cap / n);
      const auto row = dominationNumberRow(sys, mTop);
      for (int m = n; m <= mTop; ++m)
        CHECK(row[static_cast<std::size_t>(m - 1)] ==
              bruteForceMin(n, m, v).value);
    }
  }
}

TEST_CASE("solver equals a from-scratch mask DP at mid heights") {
  // Reaches past the exhaustive-search cap; this is the certification
  // route for the heights whose published table rows are misprinted.
  for (int n = 5; n <= 8; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::TwoDomination);
    const int mTop = n == 8 ? 11 : 12;
    const auto row = dominationNumberRow(sys, mTop);
    for (int m = n; m <= mTop; ++m)
      CHECK(row[static_cast<std::size_t>(m - 1)] ==
            griddom_test::maskDpDomination(n, m, 2));
  }
  for (int n = 5; n <= 7; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::ClassicalDomination);
    const auto row = dominationNumberRow(sys, 10);
    for (int m = n; m <= 10; ++m)
      CHECK(row[static_cast<std::size_t>(m - 1)] ==
            griddom_test::maskDpDomination(n, m, 1));
  }
  for (int n = 4; n <= 5; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::RomanDomination);
    const auto row = dominationNumberRow(sys, 9);
    for (int m = n; m <= 9; ++m)
      CHECK(row[static_cast<std::size_t>(m - 1)] ==
            griddom_test::maskDpRoman(n, m));
  }
}

TEST_CASE("transpose symmetry") {
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination}) {
    const int top = v == Variant::RomanDomination ? 6 : 8;
    for (int n = 1; n <= top; ++n)
      for (int m = n; m <= top; ++m)
        CHECK(dominationNumber(n, m, v) == dominationNumber(m, n, v));
  }
}

TEST_CASE("published recurrences, low heights") {
  struct Row { int n; long long r, p, m0; };
  for (const Row row : {Row{1, 2, 1, 3}, Row{2, 1, 1, 3}, Row{3, 3, 4, 5},
                        Row{4, 4, 7, 8}, Row{5, 7, 15, 14},
                        Row{6, 11, 28, 20}}) {
    const Recurrence rec = detectRecurrence(row.n, Variant::TwoDomination);
    CHECK(rec.r == row.r);
    CHECK(rec.p == row.p);
    // The published onset is sufficient, not necessarily minimal.
    CHECK(rec.m0 <= row.m0);
  }
}

TEST_CASE("recurrence extrapolation") {
  const Recurrence rec5 = detectRecurrence(5, Variant::TwoDomination);
  CHECK(evalRecurrence(rec5, 7) == 16);
  CHECK(evalRecurrence(rec5, 14) == 31);  // one period past m = 7

  const Recurrence rec1 = detectRecurrence(1, Variant::TwoDomination);
  CHECK(evalRecurrence(rec1, 1000000000LL) == (1000000000LL + 2) / 2);

  // Base-window lookups are plain table reads.
  for (long long m = 1; m < static_cast<long long>(rec5.base.size()); ++m)
    CHECK(evalRecurrence(rec5, m) ==
          rec5.base[static_cast<std::size_t>(m - 1)]);
}

TEST_CASE("recurrence agrees with direct iteration, including far out") {
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination}) {
    const int n = 4;
    const Recurrence rec = detectRecurrence(n, v);
    TransferSystem sys = buildTransferSystem(n, v);
    const int top = 160;
    const auto row = dominationNumberRow(sys, top);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const long long m =
          static_cast<long long>(rec.m0) +
          static_cast<long long>(rng() % (top - rec.m0));
      CHECK(evalRecurrence(rec, m) == row[static_cast<std::size_t>(m - 1)]);
    }
    for (int m = 1; m <= top; ++m)
      CHECK(evalRecurrence(rec, m) == row[static_cast<std::size_t>(m - 1)]);
  }
}

TEST_CASE("horizon and capacity errors") {
  CHECK_THROWS_AS(detectRecurrence(1, Variant::TwoDomination, 2),
                  HorizonError);
  CHECK_THROWS_AS(dominationNumber(15, 20, Variant::TwoDomination),
                  CapacityError);
  // The transposed orientation rescues a tall narrow grid.
  CHECK(dominationNumber(20, 3, Variant::TwoDomination) ==
        dominationNumber(3, 20, Variant::TwoDomination));
}
