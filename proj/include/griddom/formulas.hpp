#pragma once

// Closed-form tables for the three problems and the comparison harness
// between computed and published values. The tables are transcribed
// piecewise; two rows are self-contradictory in print (height 7 for
// 2-domination, height 9 for Roman) and the comparator flags those
// heights as ambiguous instead of asserting.

#include <optional>
#include <string>
#include <vector>

#include "griddom/variant.hpp"

namespace griddom {

// 2-domination number of the n x m grid, 1 <= n <= m.
long long twoDominationFormula(long long n, long long m);

// Roman domination number of the n x m grid, 1 <= n <= m.
long long romanDominationFormula(long long n, long long m);

// Classical domination number, valid for 16 <= n <= m; throws
// std::invalid_argument outside that range.
long long changDominationFormula(long long n, long long m);

// True when the published table rows for this normalised height carry
// contradictory or missing conditions and the computed value is the
// certified output.
bool formulaAmbiguous(Variant v, long long n, long long m);

long long formulaValue(Variant v, long long n, long long m);

enum class SweepSource { Solver, LossBound, Witness };

struct SweepRecord {
  int n = 0;
  int m = 0;
  std::optional<long long> computed;
  std::optional<long long> formula;
  bool match = false;
  bool ambiguous = false;
  std::string note;
};

struct SweepReport {
  Variant variant = Variant::TwoDomination;
  SweepSource source = SweepSource::Solver;
  std::vector<SweepRecord> records;

  int mismatches() const;        // non-ambiguous rows that disagree
  int ambiguousMismatches() const;
  bool allMatch() const { return mismatches() == 0; }
};

// Compares computed values against the tables over n in [nLo, nHi],
// m in [max(n, mLo), mHi]. Capacity errors are recorded per cell and the
// sweep continues.
SweepReport compareSweep(Variant v, int nLo, int nHi, int mLo, int mHi,
                         SweepSource source);

std::string sweepToText(const SweepReport& report);
std::string sweepToJson(const SweepReport& report);
std::string sweepToCsv(const SweepReport& report);

}  // namespace griddom
