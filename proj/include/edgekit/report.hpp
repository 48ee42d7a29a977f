#pragma once

#include <span>
#include <string>

#include "edgekit/evaluation.hpp"

namespace edgekit {

/// Column order of CSV reports; JSON records use the same keys.
inline constexpr const char* kReportColumns[] = {
    "scene", "detector", "sigma", "low", "high", "slope_threshold", "fp_rate", "fn_rate",
    "mean_sq_distance", "detected", "truth", "matched", "tolerance", "seed",
};

/// Header line plus one line per row, '\n' terminated. Unused parameters and
/// absent seeds are empty fields. Reals use the shortest round-trip form.
std::string to_csv(std::span<const ComparisonRow> rows);

/// JSON array of records keyed by the CSV columns (null for empty fields), plus
/// a "noise" key naming the noise generator. Pretty-printed with 2 spaces.
std::string to_json(std::span<const ComparisonRow> rows);

}  // namespace edgekit
