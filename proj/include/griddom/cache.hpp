#pragma once

// Optional on-disk cache for built border systems, keyed by variant,
// band height and rule-set version. Plain text with an embedded format
// version; a stale or mismatching file is ignored.

#include <optional>
#include <string>

#include "griddom/column_machine.hpp"

namespace griddom {

inline constexpr int kRulesVersion = 1;

std::optional<BorderSystem> loadBorderSystem(const std::string& dir,
                                             int bandHeight, Variant v);
void saveBorderSystem(const std::string& dir, const BorderSystem& sys);

// Builds through the cache directory when one is given (empty = off).
BorderSystem cachedBorderSystem(int bandHeight, Variant v,
                                const std::string& dir);

}  // namespace griddom
