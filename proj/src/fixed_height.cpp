#include "griddom/fixed_height.hpp"

#include <algorithm>
#include <unordered_map>

#include "griddom/errors.hpp"

namespace griddom {

namespace {

constexpr std::uint64_t kInfRaw = TropicalWeight::kInfRaw;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Orbit {
  const TransferSystem& sys;
  std::vector<std::uint64_t> scratch;  // direct-indexed by word index

  explicit Orbit(const TransferSystem& s)
      : sys(s),
        scratch(ipow(static_cast<std::uint64_t>(alphabetSize(s.variant)),
                     s.height),
                kInfRaw) {}

  std::vector<std::uint64_t> start() const {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(sys.stateCount));
    for (int s = 0; s < sys.stateCount; ++s) v[s] = sys.firstCost(s).raw;
    return v;
  }

  // v' [s2] = min over compatible s of v[s], plus the cost of s2.
  void step(const std::vector<std::uint64_t>& v,
            std::vector<std::uint64_t>& out) {
    std::fill(scratch.begin(), scratch.end(), kInfRaw);
    for (int s = 0; s < sys.stateCount; ++s) {
      const std::uint64_t vs = v[static_cast<std::size_t>(s)];
      if (vs == kInfRaw) continue;
      forEachSuccessorWord(sys, s, [&](std::uint64_t w) {
        if (vs < scratch[w]) scratch[w] = vs;
      });
    }
    out.resize(static_cast<std::size_t>(sys.stateCount));
    for (int t = 0; t < sys.stateCount; ++t) {
      const std::uint64_t best = scratch[sys.stateIndices[t]];
      out[static_cast<std::size_t>(t)] =
          best == kInfRaw ? kInfRaw : best + sys.columnCosts(t).raw;
    }
  }

  long long gammaOf(const std::vector<std::uint64_t>& v) const {
    std::uint64_t best = kInfRaw;
    for (int s = 0; s < sys.stateCount; ++s)
      if (!sys.dominatedMask(s).isInf())
        best = std::min(best, v[static_cast<std::size_t>(s)]);
    return best == kInfRaw ? -1 : static_cast<long long>(best);
  }
};

std::uint64_t hashVector(const std::vector<std::uint64_t>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

// Entrywise v - min(v); infinities stay put.
std::vector<std::uint64_t> normalised(const std::vector<std::uint64_t>& v,
                                      std::uint64_t* minOut) {
  std::uint64_t mn = kInfRaw;
  for (std::uint64_t x : v) mn = std::min(mn, x);
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] == kInfRaw ? kInfRaw : v[i] - mn;
  if (minOut) *minOut = mn;
  return out;
}

}  // namespace

std::vector<long long> dominationNumberRow(const TransferSystem& sys,
                                           int mMax) {
  Orbit orbit(sys);
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(mMax));
  std::vector<std::uint64_t> v = orbit.start(), next;
  for (int m = 1; m <= mMax; ++m) {
    if (m > 1) {
      orbit.step(v, next);
      v.swap(next);
    }
    const long long g = orbit.gammaOf(v);
    if (g < 0)
      throw std::runtime_error("dominationNumberRow: no dominated state "
                               "reachable; rule set broken");
    out.push_back(g);
  }
  return out;
}

long long dominationNumber(int n, long long m, Variant v) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("dominationNumber: grid must be non-empty");
  long long height = n, width = m;
  if (height > width) std::swap(height, width);
  // Tall-narrow grids solve through the transposed orientation.
  if (height > maxTransferHeight(v))
    throw CapacityError("dominationNumber: min(n,m) exceeds height bound");
  if (width > 1000000)
    throw CapacityError(
        "dominationNumber: width too large for direct iteration; use a "
        "recurrence");
  TransferSystem sys = buildTransferSystem(static_cast<int>(height), v);
  return dominationNumberRow(sys, static_cast<int>(width)).back();
}

Recurrence detectRecurrence(int n, Variant v, long long mMax) {
  const long long horizon = mMax > 0 ? mMax : 512;
  TransferSystem sys = buildTransferSystem(n, v);
  // Primitivity underwrites eventual periodicity of the orbit. Verify it
  // where the dense matrix is affordable; for larger systems the exact
  // orbit repeat found below is a certificate on its own.
  if (sys.stateCount <= 1200 &&
      !primitivityExponent(denseTransferMatrix(sys), 8).has_value())
    throw std::runtime_error(
        "detectRecurrence: transfer matrix is not primitive");
  Orbit orbit(sys);

  std::vector<std::vector<std::uint64_t>> norms;
  std::vector<std::uint64_t> mins;
  std::vector<long long> gamma;  // gamma[m-1] = gamma(n, m)
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;

  std::vector<std::uint64_t> cur = orbit.start(), next;
  long long foundAt = -1, repeatOf = -1;
  for (long long m = 1; m <= horizon; ++m) {
    if (m > 1) {
      orbit.step(cur, next);
      cur.swap(next);
    }
    gamma.push_back(orbit.gammaOf(cur));
    std::uint64_t mn;
    std::vector<std::uint64_t> norm = normalised(cur, &mn);
    const std::uint64_t h = hashVector(norm);
    auto& bucket = seen[h];
    for (std::size_t j : bucket) {
      if (norms[j] == norm) {
        repeatOf = static_cast<long long>(j) + 1;
        foundAt = m;
        break;
      }
    }
    if (foundAt >= 0) break;
    bucket.push_back(norms.size());
    norms.push_back(std::move(norm));
    mins.push_back(mn);
  }
  if (foundAt < 0)
    throw HorizonError("detectRecurrence: no repeat of the cost orbit "
                       "within " + std::to_string(horizon) +
                       " columns; raise the horizon");

  const long long j = repeatOf;           // earliest index of the repeat
  const long long r = foundAt - repeatOf; // orbit period
  std::uint64_t mnRepeat = kInfRaw;
  for (std::uint64_t x : cur) mnRepeat = std::min(mnRepeat, x);
  const long long p =
      static_cast<long long>(mnRepeat - mins[static_cast<std::size_t>(j - 1)]);

  // The orbit step commutes with constant shifts, so V(m) = V(m-r) + p
  // holds for every m >= j + r. Extend gamma far enough to certify a
  // divisor period on whole-grid values.
  const long long top = j + 2 * r;
  while (static_cast<long long>(gamma.size()) < top) {
    orbit.step(cur, next);
    cur.swap(next);
    gamma.push_back(orbit.gammaOf(cur));
  }

  Recurrence rec;
  rec.variant = v;
  rec.n = n;
  for (long long rp = 1; rp <= r; ++rp) {
    if (r % rp != 0) continue;
    if ((p * rp) % r != 0) continue;
    const long long pp = p * rp / r;
    // gamma(m) - gamma(m-rp) is r-periodic for m - rp >= j; checking the
    // window [m0, j + r + rp] therefore certifies every m >= m0.
    long long m0 = -1;
    for (long long m = j + r + rp; m >= rp + 1; --m) {
      if (gamma[static_cast<std::size_t>(m - 1)] -
              gamma[static_cast<std::size_t>(m - rp - 1)] !=
          pp)
        break;
      m0 = m;
    }
    if (m0 < 0 || m0 > j + rp) continue;  // tail not certifiable
    rec.m0 = m0;
    rec.r = rp;
    rec.p = pp;
    rec.base.assign(gamma.begin(),
                    gamma.begin() + static_cast<std::size_t>(m0 + rp - 1));
    return rec;
  }
  // The full orbit period always certifies itself.
  throw std::runtime_error("detectRecurrence: internal certification gap");
}

long long evalRecurrence(const Recurrence& rec, long long m) {
  if (m < 1) throw std::invalid_argument("evalRecurrence: m must be >= 1");
  if (m <= static_cast<long long>(rec.base.size()))
    return rec.base[static_cast<std::size_t>(m - 1)];
  const long long reduced = rec.m0 + (m - rec.m0) % rec.r;
  const long long periods = (m - reduced) / rec.r;
  return rec.base[static_cast<std::size_t>(reduced - 1)] + periods * rec.p;
}

}  // namespace griddom
