#include <cmath>

#include "doctest.h"
#include "qproxy/numerics.hpp"

using namespace qproxy;

TEST_SUITE("numerics") {

TEST_CASE("erfi on the real axis") {
  CHECK(erfi(0.0) == 0.0);
  CHECK(erfi(1.0) == doctest::Approx(1.65042575879754287).epsilon(1e-14));
  CHECK(erfi(-1.0) == doctest::Approx(-1.65042575879754287).epsilon(1e-14));
  // erfi(x) ~ e^{x^2}/(x sqrt(pi)) for large x
  const double x = 10.0;
  const double asym = std::exp(x * x) / (x * std::sqrt(M_PI));
  CHECK(erfi(x) == doctest::Approx(asym).epsilon(1e-2));
  CHECK_THROWS_AS((void)erfi(27.0), std::range_error);
}

TEST_CASE("erf_complex special values and symmetries") {
  const Complex r = erf_complex(Complex(0.5, 0.0));
  CHECK(r.real() == doctest::Approx(0.52049987781304654).epsilon(1e-14));
  CHECK(r.imag() == doctest::Approx(0.0));

  // erf(i y) = i erfi(y)
  const Complex iy = erf_complex(Complex(0.0, 0.8));
  CHECK(iy.real() == doctest::Approx(0.0));
  CHECK(iy.imag() == doctest::Approx(erfi(0.8)).epsilon(1e-13));

  // erf(conj z) = conj(erf z)
  const Complex z(1.3, -0.7);
  const Complex a = erf_complex(z);
  const Complex b = erf_complex(std::conj(z));
  CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-14));
  CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-14));

  // erf(-z) = -erf(z)
  const Complex c = erf_complex(-z);
  CHECK(c.real() == doctest::Approx(-a.real()).epsilon(1e-14));
  CHECK(c.imag() == doctest::Approx(-a.imag()).epsilon(1e-14));

  CHECK_THROWS_AS((void)erf_complex(Complex(0.1, 40.0)), std::range_error);
}

TEST_CASE("modified Bessel functions of quarter order") {
  CHECK(bessel_quarter(BesselKind::I, 0.25, 1.0) ==
        doctest::Approx(1.12385187167094597).epsilon(1e-12));
  CHECK(bessel_quarter(BesselKind::I, -0.25, 1.0) ==
        doctest::Approx(1.31775289514789261).epsilon(1e-12));

  // reduced kernel at 0: 1/Gamma(nu+1)
  CHECK(bessel_i_reduced(0.25, 0.0) ==
        doctest::Approx(1.0 / std::tgamma(1.25)).epsilon(1e-14));

  // consistency across the kernel variants
  for (double x : {0.3, 1.0, 4.0, 10.0, 35.0}) {
    for (double nu : {-0.75, -0.25, 0.25, 0.75}) {
      const double red = bessel_i_reduced(nu, x) * std::pow(0.5 * x, nu);
      const double scl = bessel_i_scaled(nu, x) * std::exp(x);
      if (x <= 50.0 && std::abs(nu) <= 0.25)
        CHECK(bessel_quarter(BesselKind::I, nu, x) ==
              doctest::Approx(red).epsilon(1e-11));
      CHECK(red == doctest::Approx(scl).epsilon(1e-11));
      CHECK(bessel_i_reduced_scaled(nu, x) * std::exp(x) ==
            doctest::Approx(bessel_i_reduced(nu, x)).epsilon(1e-11));
    }
  }

  // K via the reflection formula K_nu = pi (I_{-nu} - I_nu) / (2 sin(nu pi)).
  // Only up to x ~ 8: beyond that the I_{-nu} - I_nu cancellation destroys
  // the double-precision reference, not the implementation.
  for (double x : {0.7, 3.0, 8.0}) {
    const double i_p = bessel_i_reduced(0.25, x) * std::pow(0.5 * x, 0.25);
    const double i_m = bessel_i_reduced(-0.25, x) * std::pow(0.5 * x, -0.25);
    const double k_ref = M_PI * (i_m - i_p) / (2.0 * std::sin(0.25 * M_PI));
    CHECK(bessel_quarter(BesselKind::K, 0.25, x) ==
          doctest::Approx(k_ref).epsilon(x > 10 ? 1e-7 : 1e-10));
  }
}

TEST_CASE("adaptive Gauss-Kronrod") {
  const QuadratureResult osc =
      integrate_adaptive([](double x) { return Complex(std::cos(x), std::sin(x)); },
                         0.0, 1.0, 1e-12);
  CHECK(osc.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  CHECK(osc.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
  CHECK(osc.abs_error_estimate <= 1e-12);
  CHECK(osc.evaluations >= 15);

  const QuadratureResult gauss = integrate_adaptive(
      [](double x) { return Complex(std::exp(-x * x), 0.0); }, -10.0, 10.0, 1e-13);
  CHECK(gauss.value.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));

  CHECK_THROWS_AS((void)integrate_adaptive(
                      [](double x) { return Complex(std::exp(x), 0.0); }, 0.0,
                      1.0, 0.0),
                  usage_error);
  // a strong endpoint-free singularity exhausts the bisection depth
  auto singular = [](double x) {
    // the tiny offset keeps the value finite if a node lands exactly on 1/3
    return Complex(std::pow(std::abs(x - 1.0 / 3.0) + 1e-300, -0.9), 0.0);
  };
  CHECK_THROWS_AS((void)integrate_adaptive(singular, 0.0, 1.0, 1e-13),
                  accuracy_error);
  try {
    (void)integrate_adaptive(singular, 0.0, 1.0, 1e-13);
  } catch (const accuracy_error& e) {
    CHECK(std::isfinite(e.best_value().real()));
    CHECK(e.best_error() > 1e-13);
  }
}

TEST_CASE("determinism of quadrature") {
  auto f = [](double x) { return Complex(std::sin(3.0 * x) / (1.0 + x * x), 0.1 * x); };
  const QuadratureResult a = integrate_adaptive(f, -5.0, 7.0, 1e-11);
  const QuadratureResult b = integrate_adaptive(f, -5.0, 7.0, 1e-11);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0, 1.7) == 1.0);
  CHECK(hermite(1, 1.7) == doctest::Approx(3.4));
  CHECK(hermite(3, 2.0) == doctest::Approx(40.0));
  const double x = 1.3;
  CHECK(hermite(4, x) ==
        doctest::Approx(16.0 * x * x * x * x - 48.0 * x * x + 12.0).epsilon(1e-14));
}

}  // TEST_SUITE
