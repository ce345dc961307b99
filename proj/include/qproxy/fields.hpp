#pragma once

#include <optional>

#include "qproxy/packets.hpp"
#include "qproxy/synthesis.hpp"

namespace qproxy {

enum class Method { automatic, closed_form, quadrature };

struct FieldSample {
  double x = 0.0;
  double t = 0.0;
  Complex value{0.0, 0.0};
  Complex d_t{0.0, 0.0};
  Complex d_x{0.0, 0.0};
  // Second/mixed derivatives: only the nonrelativistic closed forms carry
  // them (needed by h_tilde and j_tilde).
  std::optional<Complex> d_xx;
  std::optional<Complex> d_xt;
  Method method = Method::quadrature;
};

bool psi_has_closed_form(const PacketSpec& spec);
bool phi_has_closed_form(const PacketSpec& spec);

// x-space wave packet psi(x,t) = (1/sqrt(2pi)) int dk psi(k,0) e^{i(kx-wt)}.
// Closed form exists for m=0 (any k0, via the complex error function); the
// closed path falls back to quadrature automatically where erf/erfi would
// overflow, recorded in `method`.
FieldSample psi_x(const PacketSpec& spec, double x, double t,
                  Method method = Method::automatic, double tol = 1e-10);

// First-quantized field phi(x,t), extra mode weight 1/sqrt(2 omega_k).
// Closed form exists for m=0, k0=0 (modified Bessel functions of orders
// +-1/4; derivatives bring in +-3/4).
FieldSample phi_x(const PacketSpec& spec, double x, double t,
                  Method method = Method::automatic, double tol = 1e-10);

// Freely spreading nonrelativistic Gaussian (hbar = 1), with analytic
// derivatives up to the mixed third order needed by the energy currents.
FieldSample nonrel_free_gaussian(double delta_x, double m, double x, double t);

// Harmonic oscillator eigenstate psi_n(x), physicists' convention,
// L2-normalized; length unit ell = sqrt(hbar/(m omega)).
double oscillator_state(int n, double x, double ell);

// Eigenstate as a FieldSample at t=0 with analytic d_x, d_xx and the phase
// derivative d_t = -i E_n psi (units hbar = m = 1, so omega = 1/ell^2).
FieldSample oscillator_sample(int n, double x, double ell);

}  // namespace qproxy
