// Command-line front end: exact solves, recurrence detection, border
// lower bounds, witness construction and the verification sweeps.
// Exit codes: 0 success / all match, 1 verified mismatch, 2 usage or
// capacity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "griddom/border_loss.hpp"
#include "griddom/cache.hpp"
#include "griddom/errors.hpp"
#include "griddom/fixed_height.hpp"
#include "griddom/formulas.hpp"
#include "griddom/oracle.hpp"
#include "griddom/parallel.hpp"
#include "griddom/witness.hpp"

using namespace griddom;

namespace {

std::string cacheDir() {
  const char* dir = std::getenv("GRIDDOM_CACHE_DIR");
  return dir ? dir : "";
}

int runSolve(const std::string& variantName, long long n, long long m,
             const std::string& method, bool json,
             const std::string& witnessOut) {
  const Variant v = variantFromName(variantName);
  long long value = 0;
  std::string used = method;
  const long long h = std::min(n, m), w = std::max(n, m);
  if (method == "dp" || (method == "auto" && w <= 4096)) {
    value = dominationNumber(static_cast<int>(n), m, v);
    used = "dp";
  } else {
    if (h > maxTransferHeight(v))
      throw CapacityError("solve: min(n,m) exceeds the height bound");
    const Recurrence rec = detectRecurrence(static_cast<int>(h), v);
    value = evalRecurrence(rec, w);
    used = "recurrence";
  }
  if (json) {
    nlohmann::json out = {{"variant", variantName},
                          {"n", n},
                          {"m", m},
                          {"value", value},
                          {"method", used}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  if (!witnessOut.empty()) {
    if (v == Variant::TwoDomination && h >= 14) {
      const WitnessResult res =
          buildTwoDominationWitness(static_cast<int>(n), static_cast<int>(m));
      std::ofstream f(witnessOut);
      writeWitness(f, res.grid, v);
    } else if (h * w <= (v == Variant::RomanDomination ? 14 : 24)) {
      const OracleResult res =
          bruteForceMin(static_cast<int>(n), static_cast<int>(m), v);
      std::ofstream f(witnessOut);
      writeWitness(f, res.witness, v);
    } else {
      std::cerr << "no witness construction covers this size\n";
      return 2;
    }
    std::cerr << "witness written to " << witnessOut << "\n";
  }
  return 0;
}

int runRecurrence(const std::string& variantName, int n, long long mMax,
                  bool json) {
  const Variant v = variantFromName(variantName);
  const Recurrence rec = detectRecurrence(n, v, mMax);
  if (json) {
    nlohmann::json out = {{"variant", variantName},
                          {"n", rec.n},
                          {"m0", rec.m0},
                          {"r", rec.r},
                          {"p", rec.p},
                          {"base", rec.base}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "gamma(" << n << ", m) = gamma(" << n << ", m - " << rec.r
              << ") + " << rec.p << " for all m >= " << rec.m0 << "\n";
  }
  return 0;
}

int runLoss(const std::string& variantName, long long n, long long m, int h,
            bool json) {
  const Variant v = variantFromName(variantName);
  const BorderSystem sys = cachedBorderSystem(h, v, cacheDir());
  BorderEvaluator eval(sys);
  const long long loss = eval.minBorderLoss(n, m);
  const long long bound = lowerBoundFromLoss(n, m, loss, v);
  if (json) {
    nlohmann::json out = {{"variant", variantName}, {"h", h},    {"n", n},
                          {"m", m},                 {"loss", loss},
                          {"lower_bound", bound}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "loss " << loss << ", lower bound " << bound << "\n";
  }
  return 0;
}

int runWitness(int n, int m, const std::string& outPath, bool json) {
  const WitnessResult res = buildTwoDominationWitness(n, m);
  if (!outPath.empty()) {
    std::ofstream f(outPath);
    writeWitness(f, res.grid, Variant::TwoDomination);
  }
  if (json) {
    nlohmann::json out = {{"n", n},
                          {"m", m},
                          {"cost", res.cost},
                          {"target", res.target},
                          {"matched", res.matched}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "cost " << res.cost << " (target " << res.target << ", "
              << (res.matched ? "matched" : "MISSED") << ")\n";
    if (outPath.empty()) std::cout << renderAssignment(res.grid);
  }
  return res.matched ? 0 : 1;
}

int verifyOracle(Variant v, bool json) {
  const long long cap = v == Variant::RomanDomination ? 12 : 18;
  nlohmann::json rows = nlohmann::json::array();
  int mismatches = 0;
  for (int n = 1; n * n <= cap; ++n) {
    TransferSystem sys = buildTransferSystem(n, v);
    const int mTop = static_cast<int>(cap / n);
    const auto row = dominationNumberRow(sys, mTop);
    for (int m = n; m <= mTop; ++m) {
      const OracleResult oracle = bruteForceMin(n, m, v);
      const long long solver = row[static_cast<std::size_t>(m - 1)];
      const bool ok = oracle.value == solver &&
                      isDominating(oracle.witness, v) &&
                      assignmentCost(oracle.witness, v) == oracle.value;
      mismatches += ok ? 0 : 1;
      rows.push_back({{"n", n},
                      {"m", m},
                      {"solver", solver},
                      {"oracle", oracle.value},
                      {"match", ok}});
    }
  }
  if (json) {
    std::cout << nlohmann::json{{"variant", variantName(v)},
                                {"suite", "oracle"},
                                {"mismatches", mismatches},
                                {"records", rows}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "oracle suite (" << variantName(v) << "): "
              << rows.size() << " grids, " << mismatches << " mismatches\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int emitSweep(const SweepReport& report, bool json, bool csv) {
  if (json) std::cout << sweepToJson(report) << "\n";
  else if (csv) std::cout << sweepToCsv(report);
  else std::cout << sweepToText(report);
  return report.allMatch() ? 0 : 1;
}

int runVerify(const std::string& variantName, const std::string& suite,
              int winLo, int winHi, bool json, bool csv) {
  const Variant v = variantFromName(variantName);
  int worst = 0;
  auto update = [&](int rc) { worst = std::max(worst, rc); };

  if (suite == "oracle" || suite == "all") update(verifyOracle(v, json));
  if (suite == "formulas" || suite == "all") {
    if (v == Variant::ClassicalDomination) {
      std::cout << "formula sweep needs n >= 16; beyond solver capacity, "
                   "skipped\n";
    } else {
      const int nHi = v == Variant::RomanDomination ? 9 : 8;
      const int mHi = v == Variant::RomanDomination ? 25 : 30;
      update(emitSweep(compareSweep(v, 1, nHi, 1, mHi, SweepSource::Solver),
                       json, csv));
    }
  }
  if (suite == "loss" || suite == "all") {
    if (v == Variant::ClassicalDomination) {
      std::cout << "loss sweep applies to 2dom and roman, skipped\n";
    } else {
      update(emitSweep(compareSweep(v, winLo, winHi, winLo, winHi,
                                    SweepSource::LossBound),
                       json, csv));
    }
  }
  if (suite == "witness" || suite == "all") {
    if (v != Variant::TwoDomination) {
      std::cout << "witness sweep applies to 2dom only, skipped\n";
    } else {
      update(emitSweep(compareSweep(v, 14, winHi >= 14 ? winHi : 20, 14,
                                    winHi >= 14 ? winHi : 20,
                                    SweepSource::Witness),
                       json, csv));
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver, lower-bound engine and verifier for "
               "2-domination, Roman domination and classical domination "
               "numbers of grid graphs"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print usage");

  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  bool json = false, csv = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--csv", csv, "CSV output for sweeps");

  std::string variant, method = "auto", suite = "all", outPath, witnessOut;
  long long n = 0, m = 0, mMax = 0;
  int h = 6;
  std::vector<int> window = {13, 18};

  auto* solve = app.add_subcommand("solve", "exact domination number");
  solve->fallthrough();
  solve->add_option("variant", variant)->required();
  solve->add_option("n", n)->required();
  solve->add_option("m", m)->required();
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"dp", "recurrence", "auto"}));
  solve->add_option("--witness-out", witnessOut);

  auto* rec = app.add_subcommand("recurrence", "detect the width recurrence");
  rec->fallthrough();
  rec->add_option("variant", variant)->required();
  rec->add_option("n", n)->required();
  rec->add_option("--m-max", mMax);

  auto* loss = app.add_subcommand("loss", "border loss and lower bound");
  loss->fallthrough();
  loss->add_option("variant", variant)->required();
  loss->add_option("n", n)->required();
  loss->add_option("m", m)->required();
  loss->add_option("--h", h);

  auto* wit = app.add_subcommand("witness", "2-dominating set construction");
  wit->fallthrough();
  wit->add_option("n", n)->required();
  wit->add_option("m", m)->required();
  wit->add_option("--out", outPath);

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  verify->fallthrough();
  verify->add_option("variant", variant)->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"formulas", "oracle", "loss", "witness", "all"}));
  verify->add_option("--window", window, "sweep window: low high")
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  setDefaultThreadCount(threads);
  try {
    if (solve->parsed())
      return runSolve(variant, n, m, method, json, witnessOut);
    if (rec->parsed())
      return runRecurrence(variant, static_cast<int>(n), mMax, json);
    if (loss->parsed()) return runLoss(variant, n, m, h, json);
    if (wit->parsed())
      return runWitness(static_cast<int>(n), static_cast<int>(m), outPath,
                        json);
    if (verify->parsed())
      return runVerify(variant, suite, window[0], window[1], json, csv);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const HorizonError& e) {
    std::cerr << "horizon error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
