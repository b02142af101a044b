#pragma once

// Dense linear algebra over the (min,+) semiring. Semiring addition is
// min, semiring multiplication is integer addition and is spelled
// operator+ so path costs compose the way they read. The semiring zero
// is the infinity sentinel: absorbing for +, neutral for min.
//
// Matrices and vectors are Eigen dense types over the TropicalWeight
// scalar. Eigen's own matrix product assumes ring semantics and must
// not be used; the free functions below implement the semiring
// product, power and matrix-vector action.

#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace griddom {

struct TropicalWeight {
  static constexpr std::uint64_t kInfRaw =
      std::numeric_limits<std::uint64_t>::max();
  // Finite values must stay below this; keeps finite + finite exact.
  static constexpr std::uint64_t kMaxFinite = std::uint64_t{1} << 62;

  std::uint64_t raw = kInfRaw;

  constexpr TropicalWeight() = default;
  constexpr explicit TropicalWeight(std::uint64_t v) : raw(v) {}

  static constexpr TropicalWeight inf() { return TropicalWeight(); }

  constexpr bool isInf() const { return raw == kInfRaw; }
  constexpr std::uint64_t value() const {
    assert(!isInf());
    return raw;
  }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) {
    return a.raw == b.raw;
  }
  friend constexpr bool operator!=(TropicalWeight a, TropicalWeight b) {
    return a.raw != b.raw;
  }
  // Infinity compares greatest.
  friend constexpr bool operator<(TropicalWeight a, TropicalWeight b) {
    return a.raw < b.raw;
  }
  friend constexpr bool operator<=(TropicalWeight a, TropicalWeight b) {
    return a.raw <= b.raw;
  }
  friend constexpr bool operator>(TropicalWeight a, TropicalWeight b) {
    return a.raw > b.raw;
  }
  friend constexpr bool operator>=(TropicalWeight a, TropicalWeight b) {
    return a.raw >= b.raw;
  }

  // Semiring multiplication; saturates at infinity.
  friend constexpr TropicalWeight operator+(TropicalWeight a,
                                            TropicalWeight b) {
    if (a.isInf() || b.isInf()) return inf();
    assert(a.raw + b.raw < kMaxFinite);
    return TropicalWeight(a.raw + b.raw);
  }
  constexpr TropicalWeight& operator+=(TropicalWeight o) {
    *this = *this + o;
    return *this;
  }
};

inline constexpr TropicalWeight kInf = TropicalWeight::inf();

// Semiring addition.
constexpr TropicalWeight min(TropicalWeight a, TropicalWeight b) {
  return a.raw < b.raw ? a : b;
}

using TropicalMatrix =
    Eigen::Matrix<TropicalWeight, Eigen::Dynamic, Eigen::Dynamic>;
using TropicalVector = Eigen::Matrix<TropicalWeight, Eigen::Dynamic, 1>;

// 0 on the diagonal, infinity elsewhere.
TropicalMatrix tropicalIdentity(Eigen::Index n);

// C[i][j] = min_k (A[i][k] + B[k][j]). Throws std::invalid_argument on a
// dimension mismatch. Parallelises over output columns.
TropicalMatrix matMul(const TropicalMatrix& a, const TropicalMatrix& b);

// k-fold semiring product by repeated squaring; k = 0 is the identity.
TropicalMatrix matPow(const TropicalMatrix& a, std::uint64_t k);

// w[i] = min_j (A[i][j] + v[j]).
TropicalVector matApply(const TropicalMatrix& a, const TropicalVector& v);

// Smallest k <= kMax with every entry of A^k finite, if any.
std::optional<int> primitivityExponent(const TropicalMatrix& a, int kMax);

bool allFinite(const TropicalMatrix& m);

bool matEquals(const TropicalMatrix& a, const TropicalMatrix& b);

// True iff shifted == base + p entrywise (infinities must coincide).
bool shiftEquals(const TropicalMatrix& base, const TropicalMatrix& shifted,
                 TropicalWeight p);

TropicalWeight minDiagonal(const TropicalMatrix& m);
TropicalWeight minEntry(const TropicalMatrix& m);

}  // namespace griddom

namespace Eigen {

template <>
struct NumTraits<griddom::TropicalWeight> {
  using Self = griddom::TropicalWeight;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline Self epsilon() { return Self(0); }
  static inline Self dummy_precision() { return Self(0); }
  static inline Self highest() { return Self::inf(); }
  static inline Self lowest() { return Self(0); }
  static inline int digits10() { return 19; }
};

}  // namespace Eigen
