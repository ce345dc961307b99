#include <cmath>

#include "doctest.h"
#include "qproxy/dirac.hpp"

using namespace qproxy;

namespace {
Complex dot(const Spinor4& a, const Spinor4& b) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 4; ++i) s += std::conj(a.components[i]) * b.components[i];
  return s;
}
}  // namespace

TEST_SUITE("dirac") {

TEST_CASE("spinor normalization and orthogonality") {
  const std::array<double, 3> k{0.4, -1.1, 2.3};
  const std::array<double, 3> mk{-0.4, 1.1, -2.3};
  const double m = 1.7;
  const Spinor4 up = spinor(SpinorBranch::u, k, 0.5, m);
  const Spinor4 um = spinor(SpinorBranch::u, k, -0.5, m);
  const Spinor4 vp = spinor(SpinorBranch::v, mk, 0.5, m);
  const Spinor4 vm = spinor(SpinorBranch::v, mk, -0.5, m);

  CHECK(std::abs(dot(up, up) - 1.0) < 1e-14);
  CHECK(std::abs(dot(um, um) - 1.0) < 1e-14);
  CHECK(std::abs(dot(vp, vp) - 1.0) < 1e-14);
  CHECK(std::abs(dot(vm, vm) - 1.0) < 1e-14);
  CHECK(std::abs(dot(up, um)) < 1e-14);
  CHECK(std::abs(dot(vp, vm)) < 1e-14);
  // u+(k) v(-k) = 0, both spins
  CHECK(std::abs(dot(up, vp)) < 1e-14);
  CHECK(std::abs(dot(up, vm)) < 1e-14);
  CHECK(std::abs(dot(um, vp)) < 1e-14);
  CHECK(std::abs(dot(um, vm)) < 1e-14);
}

TEST_CASE("massless spinors are fine away from k = 0") {
  CHECK_NOTHROW((void)spinor(SpinorBranch::u, {0.0, 0.0, 1.0}, 0.5, 0.0));
  CHECK_THROWS_AS((void)spinor(SpinorBranch::u, {0.0, 0.0, 0.0}, 0.5, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)spinor(SpinorBranch::u, {0.0, 0.0, 1.0}, 0.3, 1.0),
                  usage_error);
}

TEST_CASE("2D single-particle identities") {
  PacketSpec spec;
  spec.species = Species::dirac2d;
  PacketSpec scalar;

  for (double t : {0.0, 3.0}) {
    for (double x : {-4.2, 0.0, 1.7, 5.0}) {
      const Dirac2DDensities d = dirac2d_single_particle(spec, x, t);
      const FieldSample psi = psi_x(scalar, x, t);
      // rho/q = |psi|^2: the Dirac charge density is the Born rule
      CHECK(d.rho_over_q == doctest::Approx(std::norm(psi.value)).epsilon(1e-12));
      // H_phi = H~ once the Dirac equation fixes the spatial derivative
      CHECK(std::abs(d.h_canonical - d.h_pseudo) < 1e-12);
    }
  }
}

TEST_CASE("2D densities reject unsupported specs") {
  PacketSpec scalar;
  CHECK_THROWS_AS((void)dirac2d_single_particle(scalar, 0.0, 0.0), usage_error);
  PacketSpec massive;
  massive.species = Species::dirac2d;
  massive.mass = 1.0;
  CHECK_THROWS_AS((void)dirac2d_single_particle(massive, 0.0, 0.0),
                  capability_error);
}

TEST_CASE("negative fermion energy density appears outside the light cone") {
  PacketSpec spec;
  spec.species = Species::dirac2d;
  double most_negative = 0.0;
  double where = 0.0;
  for (double x = -10.0; x <= 10.0; x += 0.05) {
    const double h = dirac2d_single_particle(spec, x, 0.0).h_canonical;
    if (h < most_negative) {
      most_negative = h;
      where = x;
    }
  }
  CHECK(most_negative < 0.0);
  CHECK(std::abs(where) > 0.0);  // t = 0 cone is the origin
}

}  // TEST_SUITE
