#include "qproxy/fields.hpp"

#include <cmath>

namespace qproxy {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

// erfi overflows on the real axis beyond this (closed psi, k0=0 path).
constexpr double kErfiLimit = 26.0;
// erf_complex cosh/sinh overflow bound on |Im z| (closed psi, k0!=0 path).
constexpr double kCerfImLimit = 15.0;

struct BPair {
  Complex val;
  Complex deriv;
};

// Right-/left-moving halves of the massless closed-form psi:
//   B_-+(u) = pref e^{i k0 u} e^{-u^2/4dx^2} [1 +- erf(dx k0 + i u/2dx)]
// evaluated at u = x - ct and u = x + ct respectively.  Both carry the same
// e^{i k0 u} phase: the square is completed around the envelope center k0 on
// either half-line, only the integration limit (k = 0 -> -+w) differs.  The
// erf' terms collapse to constants (the Gaussians cancel the e^{-w^2}).
BPair b_minus(const PacketSpec& s, double u) {
  const double dx = s.delta_x;
  const double pref = 0.5 * std::pow(2.0 * kPi * dx * dx, -0.25);
  const Complex w(dx * s.k0, 0.5 * u / dx);
  const Complex erfw =
      (s.k0 == 0.0) ? Complex(0.0, erfi(0.5 * u / dx)) : erf_complex(w);
  const Complex phase(std::cos(s.k0 * u), std::sin(s.k0 * u));
  const Complex v = pref * phase * std::exp(-0.25 * u * u / (dx * dx)) *
                    (Complex(1.0, 0.0) + erfw);
  const Complex extra(0.0, pref * std::exp(-dx * dx * s.k0 * s.k0) / (dx * kSqrtPi));
  return {v, Complex(0.0, s.k0) * v - (0.5 * u / (dx * dx)) * v + extra};
}

BPair b_plus(const PacketSpec& s, double u) {
  const double dx = s.delta_x;
  const double pref = 0.5 * std::pow(2.0 * kPi * dx * dx, -0.25);
  const Complex w(dx * s.k0, 0.5 * u / dx);
  const Complex erfw =
      (s.k0 == 0.0) ? Complex(0.0, erfi(0.5 * u / dx)) : erf_complex(w);
  const Complex phase(std::cos(s.k0 * u), std::sin(s.k0 * u));
  const Complex v = pref * phase * std::exp(-0.25 * u * u / (dx * dx)) *
                    (Complex(1.0, 0.0) - erfw);
  const Complex extra(0.0, -pref * std::exp(-dx * dx * s.k0 * s.k0) / (dx * kSqrtPi));
  return {v, Complex(0.0, s.k0) * v - (0.5 * u / (dx * dx)) * v + extra};
}

bool psi_closed_in_range(const PacketSpec& s, double x, double t) {
  const double ym = std::abs(0.5 * (x - t) / s.delta_x);
  const double yp = std::abs(0.5 * (x + t) / s.delta_x);
  const double lim = (s.k0 == 0.0) ? kErfiLimit : kCerfImLimit;
  return std::max(ym, yp) <= lim;
}

FieldSample psi_quadrature(const PacketSpec& spec, double x, double t, double tol) {
  const KWindow w = k_window(spec);
  auto weight = [&](double k) { return amplitude_k(spec, k, 0.0); };
  auto disp = [&](double k) { return omega(spec, k); };
  const SynthesisSample s = synthesize_sample(weight, w.lo, w.hi, x, t, disp, tol);
  FieldSample out;
  out.x = x;
  out.t = t;
  out.value = s.value;
  out.d_t = s.d_t;
  out.d_x = s.d_x;
  out.method = Method::quadrature;
  return out;
}

FieldSample psi_closed(const PacketSpec& spec, double x, double t) {
  const BPair bm = b_minus(spec, x - t);
  const BPair bp = b_plus(spec, x + t);
  FieldSample out;
  out.x = x;
  out.t = t;
  out.value = bm.val + bp.val;
  out.d_x = bm.deriv + bp.deriv;
  out.d_t = -bm.deriv + bp.deriv;
  out.method = Method::closed_form;
  return out;
}

// Bessel building blocks of the massless k0=0 closed-form phi, written with
// the reduced-scaled kernels e^{-w}(w/2)^{-nu} I_nu(w) so nothing overflows
// and the u -> 0 limits are regular:
//   a(u)  = 2 sqrt(dx) RS(-1/4)
//   b(u)  = u/(2 sqrt(dx)) RS(+1/4)
//   a'(u) = u^3 RS(3/4)/(32 dx^{7/2}) - u RS(-1/4)/(2 dx^{3/2})
//   b'(u) = 2 RS(-3/4)/sqrt(dx) - u^2 RS(1/4)/(8 dx^{5/2})
// with w = u^2/(8 dx^2) and RS(nu) = bessel_i_reduced_scaled(nu, w).
struct ABPair {
  double a, b, ap, bp;
};

ABPair phi_ab(double dx, double u) {
  const double w = u * u / (8.0 * dx * dx);
  const double rm = bessel_i_reduced_scaled(-0.25, w);
  const double rp = bessel_i_reduced_scaled(0.25, w);
  const double rm3 = bessel_i_reduced_scaled(-0.75, w);
  const double rp3 = bessel_i_reduced_scaled(0.75, w);
  const double sdx = std::sqrt(dx);
  ABPair out;
  out.a = 2.0 * sdx * rm;
  out.b = 0.5 * u / sdx * rp;
  out.ap = u * u * u * rp3 / (32.0 * dx * dx * dx * sdx) -
           0.5 * u * rm / (dx * sdx);
  out.bp = 2.0 * rm3 / sdx - u * u * rp / (8.0 * dx * dx * sdx);
  return out;
}

FieldSample phi_closed(const PacketSpec& spec, double x, double t) {
  const double dx = spec.delta_x;
  const double C = std::pow(0.5 * kPi, 0.25) / (4.0 * std::sqrt(dx));
  const ABPair m = phi_ab(dx, x - t);
  const ABPair p = phi_ab(dx, x + t);
  FieldSample out;
  out.x = x;
  out.t = t;
  out.value = C * Complex(m.a + p.a, m.b - p.b);
  out.d_x = C * Complex(m.ap + p.ap, m.bp - p.bp);
  out.d_t = C * Complex(-m.ap + p.ap, -m.bp - p.bp);
  out.method = Method::closed_form;
  return out;
}

FieldSample phi_quadrature(const PacketSpec& spec, double x, double t, double tol) {
  const KWindow w = k_window(spec);
  // The 1/sqrt(2 omega) factor is singular at k=0 for m=0; synthesize maps
  // k = +-u^2 around the origin, so the integrand it actually sees is smooth.
  auto weight = [&](double k) {
    return amplitude_k(spec, k, 0.0) / std::sqrt(2.0 * omega(spec, k));
  };
  auto disp = [&](double k) { return omega(spec, k); };
  const SynthesisSample s = synthesize_sample(weight, w.lo, w.hi, x, t, disp, tol);
  FieldSample out;
  out.x = x;
  out.t = t;
  out.value = s.value;
  out.d_t = s.d_t;
  out.d_x = s.d_x;
  out.method = Method::quadrature;
  return out;
}

}  // namespace

bool psi_has_closed_form(const PacketSpec& spec) { return spec.mass == 0.0; }

bool phi_has_closed_form(const PacketSpec& spec) {
  return spec.mass == 0.0 && spec.k0 == 0.0;
}

FieldSample psi_x(const PacketSpec& spec, double x, double t, Method method,
                  double tol) {
  spec.validate();
  if (method == Method::closed_form && !psi_has_closed_form(spec))
    throw capability_error("psi_x: closed form requires m = 0");
  const bool want_closed = method != Method::quadrature && psi_has_closed_form(spec);
  if (want_closed && psi_closed_in_range(spec, x, t)) return psi_closed(spec, x, t);
  return psi_quadrature(spec, x, t, tol);
}

FieldSample phi_x(const PacketSpec& spec, double x, double t, Method method,
                  double tol) {
  spec.validate();
  if (method == Method::closed_form && !phi_has_closed_form(spec))
    throw capability_error("phi_x: closed form requires m = 0 and k0 = 0");
  const bool want_closed = method != Method::quadrature && phi_has_closed_form(spec);
  if (want_closed) return phi_closed(spec, x, t);
  return phi_quadrature(spec, x, t, tol);
}

FieldSample nonrel_free_gaussian(double delta_x, double m, double x, double t) {
  if (!(m > 0.0)) throw usage_error("nonrel_free_gaussian: m must be > 0");
  if (!(delta_x > 0.0)) throw usage_error("nonrel_free_gaussian: delta_x must be > 0");
  const double dx2 = delta_x * delta_x;
  const Complex gamma(1.0, 0.5 * t / (m * dx2));
  const Complex beta = 1.0 / (4.0 * dx2 * gamma);
  const Complex N = std::pow(2.0 * kPi * dx2, -0.25) / std::sqrt(gamma);
  const Complex psi = N * std::exp(-beta * x * x);
  FieldSample out;
  out.x = x;
  out.t = t;
  out.value = psi;
  out.d_x = -2.0 * beta * x * psi;
  const Complex psi_xx = (4.0 * beta * beta * x * x - 2.0 * beta) * psi;
  const Complex psi_xxx = (12.0 * beta * beta * x - 8.0 * beta * beta * beta * x * x * x) * psi;
  out.d_xx = psi_xx;
  // Free Schroedinger equation: i psi_t = -(1/2m) psi_xx  (hbar = 1).
  out.d_t = Complex(0.0, 0.5 / m) * psi_xx;
  out.d_xt = Complex(0.0, 0.5 / m) * psi_xxx;
  out.method = Method::closed_form;
  return out;
}

double oscillator_state(int n, double x, double ell) {
  if (n < 0 || n > 30) throw usage_error("oscillator_state: need 0 <= n <= 30");
  if (!(ell > 0.0)) throw usage_error("oscillator_state: ell must be > 0");
  const double xi = x / ell;
  const double norm =
      1.0 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * kSqrtPi * ell);
  return norm * hermite(n, xi) * std::exp(-0.5 * xi * xi);
}

FieldSample oscillator_sample(int n, double x, double ell) {
  const double xi = x / ell;
  const double psi = oscillator_state(n, x, ell);
  // H_n' = 2n H_{n-1} gives psi_n' = (2n H_{n-1}/H_n - xi) psi / ell without
  // dividing by H_n: assemble from the normalized neighbor state instead.
  const double psi_prev = (n > 0) ? oscillator_state(n - 1, x, ell) : 0.0;
  const double dpsi = (std::sqrt(2.0 * n) * psi_prev - xi * psi) / ell;
  FieldSample out;
  out.x = x;
  out.t = 0.0;
  out.value = Complex(psi, 0.0);
  out.d_x = Complex(dpsi, 0.0);
  // Eigenstate ODE: psi'' = (xi^2 - (2n+1)) psi / ell^2.
  out.d_xx = Complex((xi * xi - (2.0 * n + 1.0)) * psi / (ell * ell), 0.0);
  const double energy = (n + 0.5) / (ell * ell);  // hbar = m = 1, omega = 1/ell^2
  out.d_t = Complex(0.0, -energy) * Complex(psi, 0.0);
  out.d_xt = Complex(0.0, -energy) * Complex(dpsi, 0.0);
  out.method = Method::closed_form;
  return out;
}

}  // namespace qproxy
