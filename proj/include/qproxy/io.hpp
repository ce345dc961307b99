#pragma once

#include <string>

#include "qproxy/analysis.hpp"

namespace qproxy {

inline constexpr const char* kVersion = "0.1.0";

// CSV: '#' metadata header lines, then `x,t,<channel>...` rows in row-major
// order (t outer, x inner), 17-significant-digit floats.  Deterministic bytes.
std::string grid_to_csv(const DensityGrid& grid);

// JSON mirror: {"meta": {...}, "axes": {"x": [...], "t": [...]},
//               "channels": {...}}.
std::string grid_to_json(const DensityGrid& grid);

// {"spec": {...}, "checks": [{"name","measured","expected","tol","pass"}...]}
std::string report_to_json(const AnalysisReport& report);

void write_file(const std::string& path, const std::string& contents);

}  // namespace qproxy
