#pragma once

// Minimum loss over the height-h border of an n x m grid and the lower
// bound on the domination number it induces. The border decomposes into
// four bands and four corner squares; the band transition matrix and the
// corner matrix compose tropically around the closed border walk, and
// the minimum over the diagonal of the full circuit is the border loss.

#include <cstdint>
#include <optional>
#include <vector>

#include "griddom/column_machine.hpp"

namespace griddom {

// T^(r+k) = T^r + p entrywise for all r >= r0, certified by an exact
// repeat in the power sequence.
struct LossPeriodicity {
  long long r0 = 0;
  long long k = 0;
  long long p = 0;
};

// Inverts a (scaled) loss into a lower bound on the domination number:
// ceil((2nm + loss) / 6) for 2-domination, ceil((2nm + loss) / 5) for
// Roman (whose losses are stored twice-scaled).
long long lowerBoundFromLoss(long long n, long long m, long long loss,
                             Variant v);

// Caches band-matrix powers and corner products for one border system.
// Not safe for concurrent mutation; share per thread or pre-warm.
class BorderEvaluator {
 public:
  explicit BorderEvaluator(const BorderSystem& sys);

  // Scaled minimum loss over the border; requires n > 2h and m > 2h.
  long long minBorderLoss(long long n, long long m);

  long long dominationLowerBound(long long n, long long m);

  // Finds the power periodicity within kMax steps of the band matrix.
  LossPeriodicity lossPeriodicity(int kMax = 256);

  // Loss evaluated through the periodic extension of the band powers
  // instead of direct exponentiation. Detects periodicity on first use.
  long long minBorderLossPeriodic(long long n, long long m, int kMax = 256);
  long long dominationLowerBoundPeriodic(long long n, long long m,
                                         int kMax = 256);

  const BorderSystem& system() const { return sys_; }

 private:
  const TropicalMatrix& power(long long e);
  // Loss of the closed circuit built from the two half-chain powers plus
  // an exponent-reduction shift already expressed in loss units.
  long long circuitLoss(const TropicalMatrix& pm, const TropicalMatrix& pn,
                        long long shift);

  const BorderSystem& sys_;
  std::vector<TropicalMatrix> powers_;  // powers_[e] = bandLoss^e
  std::optional<LossPeriodicity> period_;
};

}  // namespace griddom
