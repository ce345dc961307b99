#include "qproxy/densities.hpp"

#include <cmath>

namespace qproxy {
namespace {

void require_same_point(const FieldSample& a, const FieldSample& b) {
  if (a.x != b.x || a.t != b.t)
    throw usage_error("density: psi and phi sampled at different points");
}

}  // namespace

ProxyBundle kg_proxies(const FieldSample& psi, const FieldSample& phi, double E,
                       double q, double m) {
  require_same_point(psi, phi);
  if (!(E > 0.0)) throw usage_error("kg_proxies: E must be > 0");
  ProxyBundle b;
  b.born = std::norm(psi.value);
  b.canonical_h = std::norm(phi.d_t) + std::norm(phi.d_x) + m * m * std::norm(phi.value);
  b.pseudo_h = -std::imag(std::conj(psi.value) * psi.d_t);
  const double rho_over_q = -2.0 * std::imag(std::conj(phi.value) * phi.d_t);
  b.charge_rho = q * rho_over_q;
  b.canonical_h_norm = b.canonical_h / E;
  b.pseudo_h_norm = b.pseudo_h / E;
  b.charge_norm = rho_over_q;
  return b;
}

MomentumDensities kg_momentum_densities(const FieldSample& psi,
                                        const FieldSample& phi) {
  require_same_point(psi, phi);
  MomentumDensities m;
  m.pseudo_p = std::imag(std::conj(psi.value) * psi.d_x);
  m.canonical_p = -2.0 * std::real(std::conj(phi.d_t) * phi.d_x);
  return m;
}

NonrelDensities nonrel_densities(const FieldSample& s, double V_at_x, double m,
                                 double rest_energy) {
  if (!(m > 0.0)) throw usage_error("nonrel_densities: m must be > 0");
  if (!s.d_xx)
    throw capability_error("nonrel_densities: sample lacks second derivative");
  NonrelDensities d;
  d.born = std::norm(s.value);
  d.h = 0.5 / m * std::norm(s.d_x) + V_at_x * d.born;
  d.h_tilde = V_at_x * d.born - 0.5 / m * std::real(std::conj(s.value) * (*s.d_xx));
  d.j = -1.0 / m * std::real(std::conj(s.d_t) * s.d_x);
  if (s.d_xt)
    d.j_tilde = 0.5 / m * std::real(std::conj(s.value) * (*s.d_xt) -
                                    std::conj(s.d_t) * s.d_x);
  else if (std::abs(s.d_t) != 0.0)
    throw capability_error("nonrel_densities: sample lacks mixed derivative");
  d.momentum_density = std::imag(std::conj(s.value) * s.d_x);
  d.h_hat = d.h + rest_energy * d.born;
  return d;
}

double oscillator_h_n(int n, double x, double ell) {
  // h_n = (1/(2n+1)) [ ell^2 psi_n'^2 + (x/ell)^2 psi_n^2 ]  (hbar omega units)
  const FieldSample s = oscillator_sample(n, x, ell);
  const double p = s.value.real();
  const double dp = s.d_x.real();
  const double xi = x / ell;
  return (ell * ell * dp * dp + xi * xi * p * p) / (2.0 * n + 1.0);
}

}  // namespace qproxy
