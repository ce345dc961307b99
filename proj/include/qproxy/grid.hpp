#pragma once

#include <map>
#include <string>
#include <vector>

#include "qproxy/densities.hpp"
#include "qproxy/dirac.hpp"

namespace qproxy {

struct GridMetadata {
  PacketSpec spec;
  std::string method = "auto";
  double tol = 1e-10;
  std::map<std::string, std::string> extra;  // scenario notes, SI values, ...
};

// Rectangular (x,t) grid of named real densities, row-major with t outer.
struct DensityGrid {
  std::vector<double> x_axis;
  std::vector<double> t_axis;
  std::map<std::string, std::vector<double>> channels;
  GridMetadata meta;

  std::size_t index(std::size_t it, std::size_t ix) const {
    return it * x_axis.size() + ix;
  }
  double at(const std::string& ch, std::size_t it, std::size_t ix) const {
    return channels.at(ch)[index(it, ix)];
  }
};

std::vector<double> linspace_step(double lo, double hi, double step);

enum class GridPolicy { openmp, serial };

// Evaluates the requested channels over the grid.  Each point is independent
// and written to its own slot, so the OpenMP and serial paths produce
// bit-identical grids.  Recognized channels: the relativistic proxies
// (raw + normalized), pseudo_p/canonical_p, the Dirac 2D pair, and the field
// parts re_psi/im_psi/re_phi/im_phi.
DensityGrid evaluate_grid(const PacketSpec& spec,
                          const std::vector<std::string>& channels,
                          const std::vector<double>& x_axis,
                          const std::vector<double>& t_axis,
                          Method method = Method::automatic, double tol = 1e-10,
                          GridPolicy policy = GridPolicy::openmp);

}  // namespace qproxy
