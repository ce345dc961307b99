#pragma once

#include <optional>

#include "qproxy/analysis.hpp"

namespace qproxy {

// SI constants: single touchpoint for unit conversion (everything else is in
// natural units).
namespace si {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
}  // namespace si

struct OscillatorScenario {
  int n = 0;
  double ell = 1.0;
  std::optional<double> mass_SI;       // kg
  std::optional<double> frequency_Hz;  // oscillation frequency f (omega = 2 pi f)
};

// Channels `born` and `oscillator_h_n` over x_grid (single time slice t=0).
// With SI inputs, metadata carries ell in meters and a discrepancy flag where
// the computed value departs from the 1 mm figure quoted in the literature.
DensityGrid oscillator_compare(const OscillatorScenario& scn,
                               const std::vector<double>& x_grid);

// Channels `born`, `nonrel_h_norm`, `nonrel_htilde_norm` for the freely
// spreading Gaussian at time t (energy-normalized by E = 1/(8 m delta_x^2)).
DensityGrid free_gaussian_compare(double delta_x, double m, double t,
                                  const std::vector<double>& x_grid);

// ell = sqrt(hbar / (m * 2 pi f)) in meters.
double oscillator_length_SI(double mass_SI, double frequency_Hz);

}  // namespace qproxy
