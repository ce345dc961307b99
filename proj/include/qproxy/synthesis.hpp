#pragma once

#include <cstdint>
#include <functional>

#include "qproxy/numerics.hpp"

namespace qproxy {

// One spectral synthesis evaluation: value together with the spectral
// derivatives (extra ik for d_x, extra -i omega(k) for d_t), accumulated in a
// single pass over the same quadrature nodes.
struct SynthesisSample {
  Complex value{0.0, 0.0};
  Complex d_t{0.0, 0.0};
  Complex d_x{0.0, 0.0};
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// (1/sqrt(2 pi)) int_klo^khi dk weight(k) exp(i [k x - omega(k) t]).
//
// The k-axis is split at 0 whenever the window straddles it and each half is
// mapped with k = +-u^2, which simultaneously removes an integrable
// |k|^{-1/2} weight singularity (Jacobian 2u) and smooths the |k| kink of the
// massless dispersion.  Initial panels are sized so the phase advances by at
// most pi/2 per panel; nested G7K15 estimates drive further refinement.
//
// omega_prime_max bounds |omega'(k)| (1 = speed of light for Klein-Gordon);
// it only affects the initial panel sizing.
SynthesisSample synthesize_sample(const std::function<Complex(double)>& weight,
                                  double klo, double khi, double x, double t,
                                  const std::function<double(double)>& dispersion,
                                  double tol, double omega_prime_max = 1.0);

// Value-only convenience wrapper with a generous default window.
Complex synthesize(const std::function<Complex(double)>& weight, double x,
                   double t, const std::function<double(double)>& dispersion,
                   double tol, double klo = -40.0, double khi = 40.0);

}  // namespace qproxy
