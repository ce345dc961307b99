#include <cmath>

#include "doctest.h"
#include "qproxy/fields.hpp"

using namespace qproxy;

namespace {
PacketSpec make_spec(double m, double k0) {
  PacketSpec s;
  s.mass = m;
  s.k0 = k0;
  return s;
}
}  // namespace

TEST_SUITE("fields") {

TEST_CASE("psi at the origin") {
  const PacketSpec s = make_spec(0.0, 0.0);
  for (Method m : {Method::closed_form, Method::quadrature}) {
    const FieldSample f = psi_x(s, 0.0, 0.0, m);
    CHECK(f.value.real() ==
          doctest::Approx(0.63161877774606470).epsilon(1e-10));
    CHECK(std::abs(f.value.imag()) < 1e-10);
    // even packet: psi'(0,0) = 0, psi_t(0,0) imaginary
    CHECK(std::abs(f.d_x) < 1e-9);
    CHECK(std::abs(f.d_t.real()) < 1e-9);
  }
}

TEST_CASE("phi at the origin") {
  const PacketSpec s = make_spec(0.0, 0.0);
  for (Method m : {Method::closed_form, Method::quadrature}) {
    const FieldSample f = phi_x(s, 0.0, 0.0, m);
    CHECK(f.value.real() ==
          doctest::Approx(0.91357913815611682).epsilon(1e-9));
    CHECK(std::abs(f.value.imag()) < 1e-9);
    CHECK(f.d_t.imag() ==
          doctest::Approx(-0.30877980898647931).epsilon(1e-8));
    CHECK(std::abs(f.d_t.real()) < 1e-9);
  }
}

TEST_CASE("closed form tracks quadrature, including derivatives") {
  const PacketSpec s = make_spec(0.0, 0.0);
  for (double t : {0.0, 1.5, -4.0}) {
    for (double x : {-7.0, -1.2, 0.4, t - 0.05, t + 0.05, 6.0}) {
      const FieldSample pc = psi_x(s, x, t, Method::closed_form);
      const FieldSample pq = psi_x(s, x, t, Method::quadrature);
      CHECK(std::abs(pc.value - pq.value) < 1e-9);
      CHECK(std::abs(pc.d_x - pq.d_x) < 1e-8);
      CHECK(std::abs(pc.d_t - pq.d_t) < 1e-8);
      const FieldSample fc = phi_x(s, x, t, Method::closed_form);
      const FieldSample fq = phi_x(s, x, t, Method::quadrature);
      CHECK(std::abs(fc.value - fq.value) < 1e-8);
      CHECK(std::abs(fc.d_x - fq.d_x) < 1e-7);
      CHECK(std::abs(fc.d_t - fq.d_t) < 1e-7);
    }
  }
}

TEST_CASE("boosted closed form") {
  const PacketSpec s = make_spec(0.0, 3.0);
  for (double t : {0.0, 2.0}) {
    for (double x : {-2.0, 0.7, 4.5}) {
      const FieldSample pc = psi_x(s, x, t, Method::closed_form);
      const FieldSample pq = psi_x(s, x, t, Method::quadrature);
      CHECK(pc.method == Method::closed_form);
      CHECK(std::abs(pc.value - pq.value) < 1e-9);
      CHECK(std::abs(pc.d_x - pq.d_x) < 1e-8);
      CHECK(std::abs(pc.d_t - pq.d_t) < 1e-8);
    }
  }
}

TEST_CASE("automatic method falls back where erf would overflow") {
  const PacketSpec s = make_spec(0.0, 0.0);
  const FieldSample inside = psi_x(s, 5.0, 0.0);
  CHECK(inside.method == Method::closed_form);
  const FieldSample outside = psi_x(s, 80.0, 0.0);
  CHECK(outside.method == Method::quadrature);
  CHECK(std::abs(outside.value) < 1e-12);
}

TEST_CASE("capability errors for missing closed forms") {
  CHECK_THROWS_AS((void)psi_x(make_spec(0.5, 0.0), 0.0, 0.0, Method::closed_form),
                  capability_error);
  CHECK_THROWS_AS((void)phi_x(make_spec(0.0, 1.0), 0.0, 0.0, Method::closed_form),
                  capability_error);
  // automatic works for both
  CHECK_NOTHROW((void)psi_x(make_spec(0.5, 0.0), 0.3, 0.1));
  CHECK_NOTHROW((void)phi_x(make_spec(0.0, 1.0), 0.3, 0.1));
}

TEST_CASE("free nonrelativistic Gaussian satisfies its equation of motion") {
  const double m = 2.0, dx = 0.8;
  for (double t : {0.0, 1.3}) {
    for (double x : {-1.1, 0.0, 2.4}) {
      const FieldSample f = nonrel_free_gaussian(dx, m, x, t);
      REQUIRE(f.d_xx.has_value());
      REQUIRE(f.d_xt.has_value());
      // i psi_t = -(1/2m) psi_xx
      const Complex lhs = Complex(0.0, 1.0) * f.d_t;
      const Complex rhs = -0.5 / m * *f.d_xx;
      CHECK(std::abs(lhs - rhs) < 1e-14);
      // d_xx against a central difference of d_x
      const double h = 1e-5;
      const Complex num_xx = (nonrel_free_gaussian(dx, m, x + h, t).d_x -
                              nonrel_free_gaussian(dx, m, x - h, t).d_x) /
                             (2.0 * h);
      CHECK(std::abs(*f.d_xx - num_xx) < 1e-7);
      // d_xt against a central difference of d_t
      const Complex num_xt = (nonrel_free_gaussian(dx, m, x + h, t).d_t -
                              nonrel_free_gaussian(dx, m, x - h, t).d_t) /
                             (2.0 * h);
      CHECK(std::abs(*f.d_xt - num_xt) < 1e-7);
    }
  }
  CHECK_THROWS_AS((void)nonrel_free_gaussian(1.0, 0.0, 0.0, 0.0), usage_error);
}

TEST_CASE("oscillator eigenstates") {
  // normalization by quadrature
  for (int n : {0, 1, 4}) {
    const QuadratureResult I = integrate_adaptive(
        [n](double x) {
          const double p = oscillator_state(n, x, 1.3);
          return Complex(p * p, 0.0);
        },
        -15.0, 15.0, 1e-12);
    CHECK(I.value.real() == doctest::Approx(1.0).epsilon(1e-10));
  }
  // sample derivatives against finite differences, phase evolution E_n
  const double ell = 0.9, h = 1e-6;
  for (int n : {0, 3}) {
    for (double x : {-0.7, 0.5, 1.8}) {
      const FieldSample f = oscillator_sample(n, x, ell);
      const double num_d = (oscillator_state(n, x + h, ell) -
                            oscillator_state(n, x - h, ell)) /
                           (2.0 * h);
      CHECK(f.d_x.real() == doctest::Approx(num_d).epsilon(1e-7));
      const double energy = (n + 0.5) / (ell * ell);
      CHECK(f.d_t.imag() == doctest::Approx(-energy * f.value.real()));
    }
  }
  CHECK_THROWS_AS((void)oscillator_state(-1, 0.0, 1.0), usage_error);
  CHECK_THROWS_AS((void)oscillator_state(0, 0.0, 0.0), usage_error);
}

}  // TEST_SUITE
