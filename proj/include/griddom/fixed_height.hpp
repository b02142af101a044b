#pragma once

// Exact domination numbers for fixed height: iterates the cost vector
// column by column through the transfer relation, detects the eventual
// linear periodicity of the orbit, and answers arbitrarily large widths
// in constant time through the detected recurrence.

#include <cstdint>
#include <vector>

#include "griddom/column_machine.hpp"

namespace griddom {

// gamma(n, m) for m = 1..mMax, one orbit pass.
std::vector<long long> dominationNumberRow(const TransferSystem& sys,
                                           int mMax);

// gamma(n, m). Transposes when only the other orientation fits the
// height bound. Direct iteration; prefer recurrences for very large m.
long long dominationNumber(int n, long long m, Variant v);

// gamma(n, m) = gamma(n, m - r) + p for all m >= m0, certified by an
// exact repeat of the normalised cost-vector orbit plus explicit checks
// of the leading window. base holds gamma(n, m) for m = 1..m0+r-1.
struct Recurrence {
  Variant variant = Variant::TwoDomination;
  int n = 0;
  long long m0 = 0;
  long long r = 0;
  long long p = 0;
  std::vector<long long> base;
};

// Searches the orbit up to mMax columns (0 = default horizon of 512).
// Throws HorizonError when no repeat appears.
Recurrence detectRecurrence(int n, Variant v, long long mMax = 0);

long long evalRecurrence(const Recurrence& rec, long long m);

}  // namespace griddom
