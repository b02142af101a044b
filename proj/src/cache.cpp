#include "griddom/cache.hpp"

#include <fstream>

namespace griddom {

namespace {

constexpr long long kInfMark = -1;

std::string cachePath(const std::string& dir, int bandHeight, Variant v) {
  return dir + "/border-" + variantName(v) + "-h" +
         std::to_string(bandHeight) + "-r" + std::to_string(kRulesVersion) +
         ".txt";
}

void writeMatrix(std::ofstream& out, const TropicalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const TropicalWeight w = m(i, j);
      out << (w.isInf() ? kInfMark : static_cast<long long>(w.value()));
      out << (j + 1 == m.cols() ? '\n' : ' ');
    }
  }
}

bool readMatrix(std::ifstream& in, TropicalMatrix& m, int k) {
  m.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long v;
      if (!(in >> v)) return false;
      m(i, j) = v == kInfMark ? kInf
                              : TropicalWeight(static_cast<std::uint64_t>(v));
    }
  return true;
}

}  // namespace

std::optional<BorderSystem> loadBorderSystem(const std::string& dir,
                                             int bandHeight, Variant v) {
  std::ifstream in(cachePath(dir, bandHeight, v));
  if (!in) return std::nullopt;
  std::string magic, name;
  int fileVersion = 0, rules = 0, h = 0, count = 0;
  in >> magic >> fileVersion >> rules >> name >> h >> count;
  if (!in || magic != "griddom-border" || fileVersion != 1 ||
      rules != kRulesVersion || name != variantName(v) || h != bandHeight)
    return std::nullopt;

  // Rebuild the cheap parts and check the expensive ones against them.
  BorderSystem sys = buildBorderSystem(bandHeight, v, /*withCorner=*/false);
  if (sys.stateCount != count) return std::nullopt;
  TropicalMatrix ta, ca;
  if (!readMatrix(in, ta, count) || !readMatrix(in, ca, count))
    return std::nullopt;
  if (!matEquals(ta, sys.bandLoss)) return std::nullopt;
  sys.cornerLoss = std::move(ca);
  return sys;
}

void saveBorderSystem(const std::string& dir, const BorderSystem& sys) {
  std::ofstream out(cachePath(dir, sys.bandHeight, sys.variant));
  if (!out) return;
  out << "griddom-border 1 " << kRulesVersion << ' '
      << variantName(sys.variant) << ' ' << sys.bandHeight << ' '
      << sys.stateCount << '\n';
  writeMatrix(out, sys.bandLoss);
  writeMatrix(out, sys.cornerLoss);
}

BorderSystem cachedBorderSystem(int bandHeight, Variant v,
                                const std::string& dir) {
  if (!dir.empty()) {
    if (auto sys = loadBorderSystem(dir, bandHeight, v)) return *std::move(sys);
  }
  BorderSystem sys = buildBorderSystem(bandHeight, v);
  if (!dir.empty()) saveBorderSystem(dir, sys);
  return sys;
}

}  // namespace griddom
