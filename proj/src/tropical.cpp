#include "griddom/tropical.hpp"

#include "griddom/parallel.hpp"

namespace griddom {

TropicalMatrix tropicalIdentity(Eigen::Index n) {
  TropicalMatrix m(n, n);
  m.setConstant(kInf);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = TropicalWeight(0);
  return m;
}

TropicalMatrix matMul(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matMul: inner dimensions differ");
  TropicalMatrix c(a.rows(), b.cols());
  c.setConstant(kInf);
  const Eigen::Index rows = a.rows();
  const Eigen::Index inner = a.cols();
  parallelFor(0, b.cols(), [&](std::int64_t j) {
    TropicalWeight* out = &c(0, j);
    for (Eigen::Index k = 0; k < inner; ++k) {
      const std::uint64_t w = b(k, j).raw;
      if (w == TropicalWeight::kInfRaw) continue;
      const TropicalWeight* colA = &a(0, k);
      for (Eigen::Index i = 0; i < rows; ++i) {
        const std::uint64_t av = colA[i].raw;
        if (av == TropicalWeight::kInfRaw) continue;
        const std::uint64_t s = av + w;
        if (s < out[i].raw) out[i].raw = s;
      }
    }
  });
  return c;
}

TropicalMatrix matPow(const TropicalMatrix& a, std::uint64_t k) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matPow: matrix must be square");
  TropicalMatrix result = tropicalIdentity(a.rows());
  if (k == 0) return result;
  TropicalMatrix base = a;
  while (k > 0) {
    if (k & 1) result = matMul(result, base);
    k >>= 1;
    if (k > 0) base = matMul(base, base);
  }
  return result;
}

TropicalVector matApply(const TropicalMatrix& a, const TropicalVector& v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("matApply: dimension mismatch");
  TropicalVector w(a.rows());
  w.setConstant(kInf);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const std::uint64_t vj = v(j).raw;
    if (vj == TropicalWeight::kInfRaw) continue;
    const TropicalWeight* colA = &a(0, j);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const std::uint64_t av = colA[i].raw;
      if (av == TropicalWeight::kInfRaw) continue;
      const std::uint64_t s = av + vj;
      if (s < w(i).raw) w(i).raw = s;
    }
  }
  return w;
}

std::optional<int> primitivityExponent(const TropicalMatrix& a, int kMax) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("primitivityExponent: matrix must be square");
  TropicalMatrix p = a;
  for (int k = 1; k <= kMax; ++k) {
    if (allFinite(p)) return k;
    if (k < kMax) p = matMul(p, a);
  }
  return std::nullopt;
}

bool allFinite(const TropicalMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).isInf()) return false;
  return true;
}

bool matEquals(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool shiftEquals(const TropicalMatrix& base, const TropicalMatrix& shifted,
                 TropicalWeight p) {
  if (base.rows() != shifted.rows() || base.cols() != shifted.cols())
    return false;
  for (Eigen::Index j = 0; j < base.cols(); ++j)
    for (Eigen::Index i = 0; i < base.rows(); ++i)
      if (shifted(i, j) != base(i, j) + p) return false;
  return true;
}

TropicalWeight minDiagonal(const TropicalMatrix& m) {
  TropicalWeight best = kInf;
  const Eigen::Index n = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < n; ++i) best = min(best, m(i, i));
  return best;
}

TropicalWeight minEntry(const TropicalMatrix& m) {
  TropicalWeight best = kInf;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) best = min(best, m(i, j));
  return best;
}

}  // namespace griddom
