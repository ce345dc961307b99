#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "qproxy/errors.hpp"

namespace qproxy {

using Complex = std::complex<double>;

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// Imaginary error function erfi(z) = -i erf(iz).
// Real arguments use an all-positive Maclaurin series (no cancellation);
// exp(x^2) overflow (|Re z| > 26.5 on the real axis) raises std::range_error.
Complex erfi(Complex z);
double erfi(double x);

// Error function for complex argument (Abramowitz & Stegun 7.1.29 series,
// accurate to ~1e-15 of max(1,|erf z|)).  Needed by the boosted closed-form psi.
// Throws std::range_error where intermediate cosh/sinh terms overflow.
Complex erf_complex(Complex z);

enum class BesselKind { I, K };

// Modified Bessel functions of fractional order for the Phi0xt closed form.
// Public orders are +-1/4 (the +-3/4 orders used by derivatives go through
// the same internal kernels).  x in [0, 50] guaranteed to >= 10 digits.
double bessel_quarter(BesselKind kind, double order, double x);

// e^{-x} I_nu(x): stays finite where I_nu alone overflows (x beyond ~709).
double bessel_i_scaled(double nu, double x);
// (x/2)^{-nu} I_nu(x): entire in x^2, finite at x=0 (value 1/Gamma(nu+1)).
// This is the natural building block for sqrt|u|*I_{+-1/4}(u^2/8dx^2) products.
double bessel_i_reduced(double nu, double x);
// e^{-x} (x/2)^{-nu} I_nu(x).
double bessel_i_reduced_scaled(double nu, double x);

// Adaptive Gauss-Kronrod 7/15 on [a,b], absolute tolerance.
// Deterministic: identical inputs give bit-identical results.
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b, double tol);

// Physicists' Hermite polynomial by the three-term recurrence.
double hermite(int n, double x);

}  // namespace qproxy
