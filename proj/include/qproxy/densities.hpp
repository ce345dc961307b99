#pragma once

#include "qproxy/fields.hpp"

namespace qproxy {

// The four relativistic position proxies at one spacetime point, raw and
// normalized (H/E, H~/E, rho/q; born already integrates to 1).
struct ProxyBundle {
  double born = 0.0;         // |psi|^2
  double canonical_h = 0.0;  // H = |phi_t|^2 + |phi_x|^2 + m^2 |phi|^2
  double pseudo_h = 0.0;     // H~ = -Im(psi* psi_t)
  double charge_rho = 0.0;   // rho = -2 q Im(phi* phi_t)
  double canonical_h_norm = 0.0;
  double pseudo_h_norm = 0.0;
  double charge_norm = 0.0;
};

struct NonrelDensities {
  double born = 0.0;
  double h = 0.0;        // (1/2m)|psi'|^2 + V |psi|^2
  double h_tilde = 0.0;  // V |psi|^2 - (1/2m) Re(psi* psi'')
  double j = 0.0;        // -(1/m) Re(psi_t* psi')
  double j_tilde = 0.0;  // (1/2m) Re(psi* psi_t' - psi_t* psi')
  double momentum_density = 0.0;  // Im(psi* psi')
  // Rest-energy variant H + (rest_energy) |psi|^2, derived column only.
  double h_hat = 0.0;
};

// Exact channel name strings used in every output.
namespace channel {
inline constexpr const char* born = "born";
inline constexpr const char* canonical_h = "canonical_h";
inline constexpr const char* pseudo_h = "pseudo_h";
inline constexpr const char* charge_rho = "charge_rho";
inline constexpr const char* canonical_h_norm = "canonical_h_norm";
inline constexpr const char* pseudo_h_norm = "pseudo_h_norm";
inline constexpr const char* charge_norm = "charge_norm";
inline constexpr const char* pseudo_p = "pseudo_p";
inline constexpr const char* canonical_p = "canonical_p";
inline constexpr const char* nonrel_h_norm = "nonrel_h_norm";
inline constexpr const char* nonrel_htilde_norm = "nonrel_htilde_norm";
inline constexpr const char* oscillator_h_n = "oscillator_h_n";
inline constexpr const char* dirac_charge_norm = "dirac_charge_norm";
inline constexpr const char* dirac_canonical_h_norm = "dirac_canonical_h_norm";
}  // namespace channel

// psi and phi must come from the same spec and the same (x,t).
ProxyBundle kg_proxies(const FieldSample& psi, const FieldSample& phi, double E,
                       double q, double m);

struct MomentumDensities {
  double pseudo_p = 0.0;     // Im(psi* psi')        (hbar = 1)
  double canonical_p = 0.0;  // -2 Re(phi_t* phi_x)
};
MomentumDensities kg_momentum_densities(const FieldSample& psi,
                                        const FieldSample& phi);

NonrelDensities nonrel_densities(const FieldSample& sample, double V_at_x,
                                 double m, double rest_energy = 0.0);

// Normalized oscillator energy density, integral 1; h_0 vanishes at the
// origin and peaks at x = +-ell.
double oscillator_h_n(int n, double x, double ell);

}  // namespace qproxy
