#pragma once

#include <array>

#include "qproxy/densities.hpp"

namespace qproxy {

enum class SpinorBranch { u, v };

struct Spinor4 {
  std::array<Complex, 4> components{};
  std::array<double, 3> k{};
  double s = 0.5;  // +-1/2
  SpinorBranch branch = SpinorBranch::u;
};

// Normalized free-particle 4-spinors, E(k) = sqrt((ck)^2 + (mc^2)^2)
// (hbar = c = 1 internally).  Degenerate m = 0, k = 0 is a domain error.
Spinor4 spinor(SpinorBranch branch, const std::array<double, 3>& k, double s,
               double m);

struct Dirac2DDensities {
  double rho_over_q = 0.0;     // phi+ . phi
  double h_canonical = 0.0;    // canonical energy density with the 2D gammas
  double h_pseudo = 0.0;       // H~ built from psi directly, for comparison
};

// Massless 2D single-particle Dirac field phi = psi(x,t) (1,1)/sqrt(2).
// The canonical energy density is evaluated with the on-shell spatial
// derivative d_x phi = gamma^1 gamma^0 d_t phi (the Dirac equation), which is
// what makes H_phi = H~ an identity for two-sided packets.
Dirac2DDensities dirac2d_single_particle(const PacketSpec& spec, double x,
                                         double t,
                                         Method method = Method::automatic,
                                         double tol = 1e-10);

}  // namespace qproxy
