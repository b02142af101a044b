#include "griddom/formulas.hpp"

#include <algorithm>
#include <sstream>

#include "griddom/border_loss.hpp"
#include "griddom/errors.hpp"
#include "griddom/fixed_height.hpp"
#include "griddom/witness.hpp"
#include "json.hpp"

namespace griddom {

namespace {
long long ceilDiv(long long a, long long b) { return (a + b - 1) / b; }
}

long long twoDominationFormula(long long n, long long m) {
  if (n > m) std::swap(n, m);
  if (n < 1) throw std::invalid_argument("twoDominationFormula: n >= 1");
  switch (n) {
    case 1: return ceilDiv(m + 1, 2);
    case 2: return m;
    case 3: return m + ceilDiv(m, 3);
    case 4:
      // The printed second branch disagrees with exhaustive search and
      // with the height-4 width recurrence; reconstructed from those.
      return m % 4 == 3 ? 2 * m - m / 4 : 2 * m - m / 4 + 1;
    case 5:
      return 2 * m + ceilDiv(m, 7) + (m % 7 == 0 || m % 7 == 6 ? 1 : 0);
    case 6:
      return 2 * m + (6 * m) / 11 +
             (m % 11 == 0 || m % 11 == 2 || m % 11 == 6 ? 1 : 2);
    case 7:
      // Both published branches print the same right-hand side.
      return 3 * m - m / 18 + 1;
    case 8:
      // Printed constants are one short against exhaustive search, an
      // integer program and the width recurrence; reconstructed values.
      return 3 * m + m / 3 + (m % 3 == 2 ? 2 : 1);
    default: return (n + 2) * (m + 2) / 3 - 6;
  }
}

long long romanDominationFormula(long long n, long long m) {
  if (n > m) std::swap(n, m);
  if (n < 1) throw std::invalid_argument("romanDominationFormula: n >= 1");
  switch (n) {
    case 1: return ceilDiv(2 * m, 3);
    case 2: return m + 1;
    case 3: return ceilDiv(3 * m, 2) + (m % 4 == 1 ? 0 : 1);
    case 4:
      // The published "+1" branch names m = 5 only, yet exhaustive
      // search puts m = 6 there too (and covers the unlisted m = 4).
      return (m == 5 || m == 6) ? 2 * m + 1 : 2 * m;
    case 5: return (12 * m) / 5 + 2;
    case 6: return (14 * m) / 5 + (m % 5 == 0 || m % 5 == 3 || m % 5 == 4 ? 2 : 3);
    case 7:
      return (16 * m) / 5 + ((m == 7 || m % 5 == 0) ? 2 : 3);
    case 8: return (18 * m) / 5 + (m % 5 == 3 ? 4 : 3);
    case 9:
      // The two published rows carry the same condition; the inferred
      // split is the residue test, reported as ambiguous.
      return 4 * m + (m % 5 == 4 ? 2 : 3);
    default: {
      const long long base = (2 * (n + 1) * (m + 1) - 2) / 5;
      return (n % 5 == 4 && m % 5 == 4) ? base - 1 : base;
    }
  }
}

long long changDominationFormula(long long n, long long m) {
  if (n > m) std::swap(n, m);
  if (n < 16)
    throw std::invalid_argument(
        "changDominationFormula: valid for 16 <= n <= m");
  return ceilDiv((n + 2) * (m + 2), 5) - 4;
}

bool formulaAmbiguous(Variant v, long long n, long long m) {
  if (n > m) std::swap(n, m);
  if (v == Variant::TwoDomination) return n == 7;
  if (v == Variant::RomanDomination) return n == 9;
  return false;
}

long long formulaValue(Variant v, long long n, long long m) {
  switch (v) {
    case Variant::TwoDomination: return twoDominationFormula(n, m);
    case Variant::RomanDomination: return romanDominationFormula(n, m);
    case Variant::ClassicalDomination: return changDominationFormula(n, m);
  }
  throw std::invalid_argument("formulaValue: bad variant");
}

int SweepReport::mismatches() const {
  int k = 0;
  for (const auto& r : records)
    if (!r.ambiguous && r.computed && r.formula && !r.match) ++k;
  return k;
}

int SweepReport::ambiguousMismatches() const {
  int k = 0;
  for (const auto& r : records)
    if (r.ambiguous && r.computed && r.formula && !r.match) ++k;
  return k;
}

SweepReport compareSweep(Variant v, int nLo, int nHi, int mLo, int mHi,
                         SweepSource source) {
  SweepReport report;
  report.variant = v;
  report.source = source;

  auto addRecord = [&](int n, int m, std::optional<long long> computed,
                       const std::string& note) {
    SweepRecord rec;
    rec.n = n;
    rec.m = m;
    rec.computed = computed;
    rec.ambiguous = formulaAmbiguous(v, n, m);
    try {
      rec.formula = formulaValue(v, n, m);
    } catch (const std::invalid_argument&) {
      rec.note = "formula out of range";
    }
    rec.match = rec.computed && rec.formula && *rec.computed == *rec.formula;
    if (!note.empty()) rec.note = note;
    report.records.push_back(std::move(rec));
  };

  if (source == SweepSource::Solver) {
    for (int n = nLo; n <= nHi; ++n) {
      const int mStart = std::max(n, mLo);
      if (mStart > mHi) continue;
      try {
        TransferSystem sys = buildTransferSystem(n, v);
        const std::vector<long long> row = dominationNumberRow(sys, mHi);
        for (int m = mStart; m <= mHi; ++m)
          addRecord(n, m, row[static_cast<std::size_t>(m - 1)], "");
      } catch (const CapacityError& e) {
        for (int m = mStart; m <= mHi; ++m)
          addRecord(n, m, std::nullopt, e.what());
      }
    }
    return report;
  }

  if (source == SweepSource::LossBound) {
    BorderSystem sys = buildBorderSystem(6, v);
    BorderEvaluator eval(sys);
    for (int n = nLo; n <= nHi; ++n)
      for (int m = std::max(n, mLo); m <= mHi; ++m) {
        if (n <= 2 * sys.bandHeight || m <= 2 * sys.bandHeight) {
          addRecord(n, m, std::nullopt, "below the band window");
          continue;
        }
        addRecord(n, m, eval.dominationLowerBound(n, m), "");
      }
    return report;
  }

  // Witness source: 2-domination only.
  if (v != Variant::TwoDomination)
    throw std::invalid_argument("compareSweep: witnesses exist for 2dom only");
  for (int n = nLo; n <= nHi; ++n)
    for (int m = std::max(n, mLo); m <= mHi; ++m) {
      if (n < 14 || m < 14) {
        addRecord(n, m, std::nullopt, "below the witness range");
        continue;
      }
      const WitnessResult w = buildTwoDominationWitness(n, m);
      addRecord(n, m, w.cost, w.matched ? "" : "witness missed the target");
    }
  return report;
}

std::string sweepToText(const SweepReport& report) {
  std::ostringstream out;
  const char* sourceName =
      report.source == SweepSource::Solver
          ? "solver"
          : report.source == SweepSource::LossBound ? "loss" : "witness";
  out << "variant " << variantName(report.variant) << ", source "
      << sourceName << ", " << report.records.size() << " cells\n";
  int shown = 0;
  for (const auto& r : report.records) {
    const bool interesting = (!r.match && r.computed && r.formula) ||
                             (!r.note.empty() && !r.computed);
    if (!interesting) continue;
    out << "  " << r.n << " x " << r.m << ": ";
    if (r.computed) out << "computed " << *r.computed;
    else out << "no value";
    if (r.formula) out << ", table " << *r.formula;
    if (r.ambiguous) out << " [published-row-ambiguous]";
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
    ++shown;
  }
  if (shown == 0) out << "  all compared cells match\n";
  out << "mismatches: " << report.mismatches()
      << ", ambiguous-row disagreements: " << report.ambiguousMismatches()
      << "\n";
  return out.str();
}

namespace {
nlohmann::json sweepJson(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json row = {{"n", r.n}, {"m", r.m},
                          {"match", r.match}, {"ambiguous", r.ambiguous}};
    if (r.computed) row["computed"] = *r.computed;
    if (r.formula) row["formula"] = *r.formula;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  const char* sourceName =
      report.source == SweepSource::Solver
          ? "solver"
          : report.source == SweepSource::LossBound ? "loss" : "witness";
  return nlohmann::json{{"variant", variantName(report.variant)},
                        {"source", sourceName},
                        {"mismatches", report.mismatches()},
                        {"ambiguous_mismatches", report.ambiguousMismatches()},
                        {"records", std::move(rows)}};
}
}  // namespace

std::string sweepToJson(const SweepReport& report) {
  return sweepJson(report).dump(2);
}

std::string sweepToCsv(const SweepReport& report) {
  std::ostringstream out;
  out << "variant,source,n,m,computed,formula,match,ambiguous,note\n";
  const char* sourceName =
      report.source == SweepSource::Solver
          ? "solver"
          : report.source == SweepSource::LossBound ? "loss" : "witness";
  for (const auto& r : report.records) {
    out << variantName(report.variant) << ',' << sourceName << ',' << r.n
        << ',' << r.m << ',';
    if (r.computed) out << *r.computed;
    out << ',';
    if (r.formula) out << *r.formula;
    out << ',' << (r.match ? 1 : 0) << ',' << (r.ambiguous ? 1 : 0) << ','
        << r.note << "\n";
  }
  return out.str();
}

}  // namespace griddom
