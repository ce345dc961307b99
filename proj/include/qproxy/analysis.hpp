#pragma once

#include <functional>
#include <optional>

#include "qproxy/grid.hpp"

namespace qproxy {

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;  // target value or bound
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct AnalysisReport {
  std::map<std::string, std::string> provenance;
  std::vector<CheckRecord> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Composite-Simpson integral over x at fixed t.  Fails loudly when the grid
// window truncates the tails (boundary samples above `guard` of the peak).
double integrate_channel(const DensityGrid& grid, const std::string& channel,
                         std::size_t t_index, double guard = 1e-10);

enum class ConeSide { inside, outside, straddling };

struct NegativeInterval {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double min_value = 0.0;
  ConeSide side = ConeSide::outside;
};

// Maximal x-intervals where channel < -floor_fraction * peak(|channel|),
// classified against the light cone |x| = c|t| with a half-pixel guard band.
std::vector<NegativeInterval> negative_regions(const DensityGrid& grid,
                                               const std::string& channel,
                                               std::size_t t_index,
                                               double floor_fraction = 1e-4);

struct ConeOffsets {
  bool applicable = false;
  double right = 0.0;  // c|t| - argmax_{x>0}, parabolic sub-grid refinement
  double left = 0.0;
};

ConeOffsets cone_offset(const DensityGrid& grid, const std::string& channel,
                        std::size_t t_index);

// Max over proxy pairs of sup_x |p_i - p_j| / common peak; needs the four
// normalized proxy channels.
double proxy_divergence(const DensityGrid& grid, std::size_t t_index);

// d<x>/dt of an energy-normalized channel between two time slices.
double centroid_velocity(const DensityGrid& grid, const std::string& channel,
                         std::size_t t_index_a, std::size_t t_index_b,
                         double guard = 1e-10);

// Second central moments at the requested time slices.
std::vector<double> variance_growth(const DensityGrid& grid,
                                    const std::string& channel,
                                    const std::vector<std::size_t>& t_indices,
                                    double guard = 1e-10);

// ---- line integrals with power-law tail extrapolation -------------------

// Graded integration schedule: Simpson segments (prev_end, x_end] with the
// given step, mirrored to negative x.  The x_end values double as the nested
// windows X for the 1/X -> 0 extrapolation.
struct LineSegment {
  double x_end;
  double step;
};

// Integrates each component of f over [-X, X] for every window X in the
// schedule and extrapolates polynomially in 1/X to X -> infinity.  Handles
// the O(1/x^2) tails of the massless phi-based densities; for exponentially
// decaying integrands the extrapolation is a no-op.  f evaluations run in
// parallel; assembly is deterministic.
std::vector<double> line_integral_extrapolated(
    const std::function<std::vector<double>(double)>& f, std::size_t ncomp,
    const std::vector<LineSegment>& schedule, bool parallel = true);

}  // namespace qproxy
