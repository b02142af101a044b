// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Set GRIDDOM_ACCEPT_LONG=1 to include the long-running extensions
// (heights 9..12 recurrences, the full 13..35 border window, the
// classical-domination formula cross-check).

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "griddom/border_loss.hpp"
#include "griddom/errors.hpp"
#include "griddom/fixed_height.hpp"
#include "griddom/formulas.hpp"
#include "griddom/oracle.hpp"
#include "griddom/witness.hpp"

using namespace griddom;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  std::string detail;

  explicit Criterion(const char* n)
      : name(n), start(std::chrono::steady_clock::now()) {}

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }

  void finish() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s  %-55s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name,
                static_cast<long long>(ms), detail.empty() ? "" : "  -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

bool longSuite() {
  const char* env = std::getenv("GRIDDOM_ACCEPT_LONG");
  return env && std::string(env) == "1";
}

void criterion1OracleEquivalence() {
  Criterion c("1. oracle equivalence (all variants, tiny grids)");
  for (Variant v : {Variant::TwoDomination, Variant::RomanDomination,
                    Variant::ClassicalDomination}) {
    const long long cap = v == Variant::RomanDomination ? 12 : 18;
    for (int n = 1; static_cast<long long>(n) * n <= cap; ++n) {
      TransferSystem sys = buildTransferSystem(n, v);
      const int mTop = static_cast<int>(cap / n);
      const auto row = dominationNumberRow(sys, mTop);
      for (int m = n; m <= mTop; ++m) {
        const OracleResult res = bruteForceMin(n, m, v);
        c.expect(res.value == row[static_cast<std::size_t>(m - 1)],
                 variantName(v) + " " + std::to_string(n) + "x" +
                     std::to_string(m));
        c.expect(isDominating(res.witness, v) &&
                     assignmentCost(res.witness, v) == res.value,
                 "oracle witness " + std::to_string(n) + "x" +
                     std::to_string(m));
      }
    }
  }
  c.finish();
}

void criterion2TwoDomTheorem() {
  Criterion c("2. 2-domination theorem, heights 1..8, widths to 30");
  int ambiguousNoted = 0;
  for (int n = 1; n <= 8; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::TwoDomination);
    const auto row = dominationNumberRow(sys, 30);
    for (int m = n; m <= 30; ++m) {
      const long long solver = row[static_cast<std::size_t>(m - 1)];
      const long long table = twoDominationFormula(n, m);
      if (formulaAmbiguous(Variant::TwoDomination, n, m)) {
        // Height 7 prints duplicate branches; the solver value is the
        // certified output and disagreement is only reported.
        if (solver != table) ++ambiguousNoted;
        continue;
      }
      c.expect(solver == table,
               "2dom " + std::to_string(n) + "x" + std::to_string(m) +
                   " solver " + std::to_string(solver) + " vs table " +
                   std::to_string(table));
    }
  }
  if (ambiguousNoted > 0)
    c.detail += " ambiguous height-7 disagreements: " +
                std::to_string(ambiguousNoted);
  c.finish();
}

void criterion3Recurrences() {
  Criterion c("3. published 2-domination recurrences");
  struct Row { int n; long long r, p, m0; };
  const std::vector<Row> published = {
      {1, 2, 1, 3},   {2, 1, 1, 3},   {3, 3, 4, 5},   {4, 4, 7, 8},
      {5, 7, 15, 14}, {6, 11, 28, 20}, {7, 18, 53, 31}, {8, 3, 10, 16},
      {9, 3, 11, 17}, {10, 1, 4, 14}, {11, 3, 13, 16}, {12, 3, 14, 17}};
  const int top = longSuite() ? 12 : 8;
  for (const Row& row : published) {
    if (row.n > top) continue;
    const Recurrence rec = detectRecurrence(row.n, Variant::TwoDomination);
    c.expect(rec.r == row.r && rec.p == row.p,
             "height " + std::to_string(row.n) + ": detected r=" +
                 std::to_string(rec.r) + " p=" + std::to_string(rec.p));
    // The published onset must be covered by the detected one.
    c.expect(rec.m0 <= row.m0,
             "height " + std::to_string(row.n) + ": onset " +
                 std::to_string(rec.m0) + " > published " +
                 std::to_string(row.m0));
  }
  if (top < 12) c.detail += " heights 9..12 run with GRIDDOM_ACCEPT_LONG=1";
  c.finish();
}

void criterion4RomanTheorem() {
  Criterion c("4. Roman theorem, heights 1..7, widths to 25");
  for (int n = 1; n <= 7; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::RomanDomination);
    const auto row = dominationNumberRow(sys, 25);
    for (int m = n; m <= 25; ++m) {
      const long long solver = row[static_cast<std::size_t>(m - 1)];
      if (formulaAmbiguous(Variant::RomanDomination, n, m)) continue;
      c.expect(solver == romanDominationFormula(n, m),
               "roman " + std::to_string(n) + "x" + std::to_string(m) +
                   " solver " + std::to_string(solver) + " vs table " +
                   std::to_string(romanDominationFormula(n, m)));
    }
  }
  // Height 9 carries contradictory published conditions: publish the
  // solver values instead of asserting.
  {
    TransferSystem sys = buildTransferSystem(9, Variant::RomanDomination);
    const auto row = dominationNumberRow(sys, 14);
    std::string note = " height-9 solver values m=9..14:";
    for (int m = 9; m <= 14; ++m)
      note += " " + std::to_string(row[static_cast<std::size_t>(m - 1)]);
    c.detail += note;
  }
  c.finish();
}

void criterion5BorderSharpness(BorderEvaluator& eval) {
  Criterion c("5. border-loss sharpness, 13 <= n <= m <= 20");
  const int top = longSuite() ? 35 : 20;
  for (int n = 13; n <= top; ++n)
    for (int m = n; m <= top; ++m) {
      const long long bound = eval.dominationLowerBound(n, m);
      const long long table = (static_cast<long long>(n) + 2) * (m + 2) / 3 - 6;
      c.expect(bound == table,
               std::to_string(n) + "x" + std::to_string(m) + " bound " +
                   std::to_string(bound) + " vs " + std::to_string(table));
    }
  if (top < 35) c.detail += " window to 35 runs with GRIDDOM_ACCEPT_LONG=1";
  c.finish();
}

void criterion6LossPeriodicity(BorderEvaluator& eval) {
  Criterion c("6. loss periodicity and periodic extension to 200");
  const LossPeriodicity per = eval.lossPeriodicity(192);
  c.expect(per.k >= 1, "no periodicity found");
  std::mt19937_64 rng(2024);
  std::vector<std::pair<int, int>> samples = {{200, 200}, {13, 200}};
  while (samples.size() < 10) {
    const int n = 13 + static_cast<int>(rng() % 188);
    const int m = n + static_cast<int>(rng() % (201 - n));
    samples.push_back({n, m});
  }
  for (auto [n, m] : samples) {
    const long long bound = eval.dominationLowerBoundPeriodic(n, m);
    const long long table = (static_cast<long long>(n) + 2) * (m + 2) / 3 - 6;
    c.expect(bound == table,
             std::to_string(n) + "x" + std::to_string(m) + " bound " +
                 std::to_string(bound) + " vs " + std::to_string(table));
  }
  c.finish();
}

void criterion7Witnesses() {
  Criterion c("7. witness optimality, 14 <= n <= m <= 40");
  for (int n = 14; n <= 40; ++n)
    for (int m = n; m <= 40; ++m) {
      const WitnessResult w = buildTwoDominationWitness(n, m);
      const long long target =
          (static_cast<long long>(n) + 2) * (m + 2) / 3 - 6;
      c.expect(w.matched && w.cost == target &&
                   isDominating(w.grid, Variant::TwoDomination),
               std::to_string(n) + "x" + std::to_string(m) + " cost " +
                   std::to_string(w.cost) + " target " +
                   std::to_string(target));
    }
  c.finish();
}

void criterion8Primitivity() {
  Criterion c("8. transfer-matrix primitivity, heights 1..8");
  for (int n = 1; n <= 8; ++n) {
    const TransferSystem sys = buildTransferSystem(n, Variant::TwoDomination);
    const auto k = primitivityExponent(denseTransferMatrix(sys), 3);
    c.expect(k.has_value() && *k <= 3,
             "height " + std::to_string(n) + " exponent > 3");
  }
  c.finish();
}

void criterion9Classical() {
  Criterion c("9. classical domination vs oracle (and formula, opt-in)");
  for (int n = 1; n * n <= 18; ++n) {
    TransferSystem sys = buildTransferSystem(n, Variant::ClassicalDomination);
    const int mTop = 18 / n;
    const auto row = dominationNumberRow(sys, mTop);
    for (int m = n; m <= mTop; ++m)
      c.expect(row[static_cast<std::size_t>(m - 1)] ==
                   bruteForceMin(n, m, Variant::ClassicalDomination).value,
               "dom " + std::to_string(n) + "x" + std::to_string(m));
  }
  if (longSuite()) {
    try {
      const long long g = dominationNumber(16, 16, Variant::ClassicalDomination);
      c.expect(g == changDominationFormula(16, 16),
               "16x16 solver " + std::to_string(g) + " vs formula 61");
    } catch (const CapacityError& e) {
      c.detail += " 16x16 skipped (capacity): " + std::string(e.what());
    }
  } else {
    c.detail += " formula cross-check at 16x16 is opt-in";
  }
  c.finish();
}

void criterion10Algebra() {
  Criterion c("10. tropical algebra property suite, 1000 instances");
  std::mt19937_64 rng(7777);
  std::uniform_int_distribution<int> val(0, 30), dim(1, 6), expo(0, 8);
  auto randMat = [&](int rows, int cols) {
    TropicalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = val(rng) < 6 ? kInf
                               : TropicalWeight(
                                     static_cast<std::uint64_t>(val(rng)));
    return m;
  };
  auto naive = [](const TropicalMatrix& a, const TropicalMatrix& b) {
    TropicalMatrix c(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        TropicalWeight best = kInf;
        for (Eigen::Index k = 0; k < a.cols(); ++k)
          best = min(best, a(i, k) + b(k, j));
        c(i, j) = best;
      }
    return c;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = dim(rng);
    const TropicalMatrix a = randMat(k, k), b = randMat(k, k),
                         m = randMat(k, k);
    c.expect(matEquals(matMul(a, b), naive(a, b)), "product definition");
    c.expect(matEquals(matMul(matMul(a, b), m), matMul(a, matMul(b, m))),
             "associativity");
    const std::uint64_t x = static_cast<std::uint64_t>(expo(rng));
    const std::uint64_t y = static_cast<std::uint64_t>(expo(rng));
    c.expect(matEquals(matPow(m, x + y), matMul(matPow(m, x), matPow(m, y))),
             "power addition");
    TropicalVector vvec(k);
    for (int i = 0; i < k; ++i)
      vvec(i) = TropicalWeight(static_cast<std::uint64_t>(val(rng)));
    TropicalVector iter = vvec;
    for (std::uint64_t s = 0; s < x; ++s) iter = matApply(m, iter);
    c.expect(matEquals(TropicalMatrix(matApply(matPow(m, x), vvec)),
                       TropicalMatrix(iter)),
             "apply consistency");
    if (!c.ok) break;
  }
  c.finish();
}

}  // namespace

int main() {
  std::printf("griddom acceptance suite%s\n",
              longSuite() ? " (long extensions enabled)" : "");
  criterion1OracleEquivalence();
  criterion2TwoDomTheorem();
  criterion3Recurrences();
  criterion4RomanTheorem();

  {
    const BorderSystem sys = buildBorderSystem(6, Variant::TwoDomination);
    BorderEvaluator eval(sys);
    criterion5BorderSharpness(eval);
    criterion6LossPeriodicity(eval);
  }

  criterion7Witnesses();
  criterion8Primitivity();
  criterion9Classical();
  criterion10Algebra();

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
