#include "griddom/border_loss.hpp"

#include <algorithm>
#include <unordered_map>

#include "griddom/errors.hpp"

namespace griddom {

namespace {

std::uint64_t hashMatrix(const TropicalMatrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      h ^= m(i, j).raw + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
  return h;
}

TropicalMatrix normalisedMatrix(const TropicalMatrix& m,
                                std::uint64_t* minOut) {
  const TropicalWeight mn = minEntry(m);
  TropicalMatrix out = m;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!out(i, j).isInf()) out(i, j).raw -= mn.raw;
  if (minOut) *minOut = mn.raw;
  return out;
}

}  // namespace

long long lowerBoundFromLoss(long long n, long long m, long long loss,
                             Variant v) {
  const long long nm = n * m;
  long long num, den;
  switch (v) {
    case Variant::TwoDomination:
      num = 2 * nm + loss;
      den = 6;
      break;
    case Variant::RomanDomination:
      num = 2 * nm + loss;  // loss carries the factor-2 scaling
      den = 5;
      break;
    case Variant::ClassicalDomination:
      num = nm + loss;
      den = 5;
      break;
    default:
      throw std::invalid_argument("lowerBoundFromLoss: bad variant");
  }
  return (num + den - 1) / den;
}

BorderEvaluator::BorderEvaluator(const BorderSystem& sys) : sys_(sys) {
  powers_.push_back(tropicalIdentity(sys.stateCount));
}

const TropicalMatrix& BorderEvaluator::power(long long e) {
  while (static_cast<long long>(powers_.size()) <= e)
    powers_.push_back(matMul(powers_.back(), sys_.bandLoss));
  return powers_[static_cast<std::size_t>(e)];
}

long long BorderEvaluator::circuitLoss(const TropicalMatrix& pm,
                                       const TropicalMatrix& pn,
                                       long long shift) {
  const TropicalMatrix half =
      matMul(matMul(pm, sys_.cornerLoss), matMul(pn, sys_.cornerLoss));
  const TropicalWeight best = minDiagonal(matMul(half, half));
  if (best.isInf())
    throw std::runtime_error("border circuit has no closed walk");
  return static_cast<long long>(best.value()) + shift;
}

long long BorderEvaluator::minBorderLoss(long long n, long long m) {
  const int h = sys_.bandHeight;
  if (n <= 2 * h || m <= 2 * h)
    throw std::invalid_argument(
        "minBorderLoss: grid must exceed twice the band height");
  const long long em = m - 2 * h - 1, en = n - 2 * h - 1;
  power(std::max(em, en));  // grow the cache once; references stay valid
  return circuitLoss(powers_[static_cast<std::size_t>(em)],
                     powers_[static_cast<std::size_t>(en)], 0);
}

long long BorderEvaluator::dominationLowerBound(long long n, long long m) {
  return lowerBoundFromLoss(n, m, minBorderLoss(n, m), sys_.variant);
}

LossPeriodicity BorderEvaluator::lossPeriodicity(int kMax) {
  if (period_) return *period_;
  std::unordered_map<std::uint64_t, std::vector<long long>> seen;
  std::vector<std::uint64_t> mins;
  std::vector<TropicalMatrix> norms;
  for (long long e = 1; e <= kMax; ++e) {
    std::uint64_t mn;
    TropicalMatrix norm = normalisedMatrix(power(e), &mn);
    const std::uint64_t hsh = hashMatrix(norm);
    for (long long j : seen[hsh]) {
      if (matEquals(norms[static_cast<std::size_t>(j - 1)], norm)) {
        LossPeriodicity per;
        per.r0 = j;
        per.k = e - j;
        per.p = static_cast<long long>(mn -
                                       mins[static_cast<std::size_t>(j - 1)]);
        period_ = per;
        return per;
      }
    }
    seen[hsh].push_back(e);
    norms.push_back(std::move(norm));
    mins.push_back(mn);
  }
  throw HorizonError("lossPeriodicity: no repeat within " +
                     std::to_string(kMax) + " powers");
}

long long BorderEvaluator::minBorderLossPeriodic(long long n, long long m,
                                                 int kMax) {
  const int h = sys_.bandHeight;
  if (n <= 2 * h || m <= 2 * h)
    throw std::invalid_argument(
        "minBorderLossPeriodic: grid must exceed twice the band height");
  const LossPeriodicity per = lossPeriodicity(kMax);
  long long shift = 0;
  auto reduce = [&](long long e) -> long long {
    if (e < per.r0 + per.k) return e;
    const long long wraps = (e - per.r0) / per.k;
    shift += wraps * per.p;
    return e - wraps * per.k;
  };
  const long long em = reduce(m - 2 * h - 1);
  const long long en = reduce(n - 2 * h - 1);
  power(std::max(em, en));
  // Each band power appears twice around the circuit.
  return circuitLoss(powers_[static_cast<std::size_t>(em)],
                     powers_[static_cast<std::size_t>(en)], 2 * shift);
}

long long BorderEvaluator::dominationLowerBoundPeriodic(long long n,
                                                        long long m,
                                                        int kMax) {
  return lowerBoundFromLoss(n, m, minBorderLossPeriodic(n, m, kMax),
                            sys_.variant);
}

}  // namespace griddom
