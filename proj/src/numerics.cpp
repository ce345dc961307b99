#include "qproxy/numerics.hpp"

#include <cmath>
#include <limits>

namespace qproxy {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;

// Real erfi by the all-positive Maclaurin series; every term is positive so
// there is no cancellation, and the sum itself bounds every term from above.
double erfi_real(double x) {
  const double ax = std::abs(x);
  if (ax > 26.5)
    throw std::range_error("erfi: exp(x^2) overflow for |x| > 26.5");
  // Sum on |x| so every term is positive (erfi is odd), restore the sign last.
  const double x2 = ax * ax;
  double term = ax;  // |x|^(2n+1)/n!
  double sum = 0.0, comp = 0.0;
  for (int n = 0; n < 4000; ++n) {
    const double contrib = term / (2 * n + 1);
    // Kahan compensated summation: the series can run ~1000 terms near the
    // overflow threshold.
    const double y = contrib - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    term *= x2 / (n + 1);
    if (contrib < sum * 1e-18 && n > 2) break;
  }
  return std::copysign(kTwoOverSqrtPi * sum, x);
}

}  // namespace

double erfi(double x) { return erfi_real(x); }

Complex erf_complex(Complex z) {
  if (z.real() < 0.0) return -erf_complex(-z);
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return Complex(std::erf(x), 0.0);
  // erfc(z) below ~1e-18 whenever Re(z^2) is large: the series is then just 1.
  if (x * x - y * y > 42.0 && x > 6.0) return Complex(1.0, 0.0);
  const int nmax = static_cast<int>(2.0 * std::abs(y)) + 15;
  if (nmax * std::abs(y) > 690.0)
    throw std::range_error("erf_complex: cosh overflow for large |Im z|");
  if (x < 1e-8) {
    // First-order expansion off the imaginary axis, where the series below
    // degenerates; erf'(iy) = (2/sqrt(pi)) exp(y^2).
    return Complex(x * kTwoOverSqrtPi * std::exp(y * y), erfi_real(y));
  }
  // Abramowitz & Stegun 7.1.29.
  const double ex = std::exp(-x * x);
  const double c2 = std::cos(2.0 * x * y);
  const double s2 = std::sin(2.0 * x * y);
  double re = std::erf(x) + ex / (2.0 * kPi * x) * (1.0 - c2);
  double im = ex / (2.0 * kPi * x) * s2;
  double sre = 0.0, sim = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    const double en = std::exp(-0.25 * n * n) / (n * n + 4.0 * x * x);
    const double ch = std::cosh(n * y);
    const double sh = std::sinh(n * y);
    sre += en * (2.0 * x - 2.0 * x * ch * c2 + n * sh * s2);
    sim += en * (2.0 * x * ch * s2 + n * sh * c2);
  }
  re += (2.0 / kPi) * ex * sre;
  im += (2.0 / kPi) * ex * sim;
  return Complex(re, im);
}

Complex erfi(Complex z) {
  if (z.imag() == 0.0) return Complex(erfi_real(z.real()), 0.0);
  if (z.real() == 0.0) return Complex(0.0, std::erf(z.imag()));
  // erfi(z) = -i erf(iz)
  const Complex e = erf_complex(Complex(-z.imag(), z.real()));
  return Complex(e.imag(), -e.real());
}

namespace {

// Branch switch for the modified Bessel kernels, covered by an overlap test.
constexpr double kBesselSeriesMax = 30.0;

double bessel_i_reduced_series(double nu, double x) {
  // (x/2)^{-nu} I_nu(x) = sum_j (x^2/4)^j / (j! Gamma(nu+j+1)); entire, all
  // terms positive for nu > -1.
  const double q = 0.25 * x * x;
  double term = 1.0 / std::tgamma(nu + 1.0);
  double sum = term;
  for (int j = 1; j < 400; ++j) {
    term *= q / (j * (nu + j));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

double bessel_i_scaled_asym(double nu, double x) {
  // e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu)/x^k with
  // a_k = prod_{j<=k} (4nu^2-(2j-1)^2)/(8j).
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double f = 2.0 * k - 1.0;
    term *= -(mu - f * f) / (8.0 * k * x);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

double bessel_k_scaled_asym(double nu, double x) {
  // e^{x} K_nu(x) ~ sqrt(pi/2x) sum_k a_k(nu)/x^k (same a_k, all + signs).
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double f = 2.0 * k - 1.0;
    term *= (mu - f * f) / (8.0 * k * x);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

}  // namespace

double bessel_i_reduced(double nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel: negative argument");
  if (x <= kBesselSeriesMax) return bessel_i_reduced_series(nu, x);
  if (x > 700.0) throw std::range_error("bessel_i_reduced: e^x overflow");
  return std::pow(0.5 * x, -nu) * bessel_i_scaled_asym(nu, x) * std::exp(x);
}

double bessel_i_reduced_scaled(double nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel: negative argument");
  if (x <= kBesselSeriesMax) return bessel_i_reduced_series(nu, x) * std::exp(-x);
  return std::pow(0.5 * x, -nu) * bessel_i_scaled_asym(nu, x);
}

double bessel_i_scaled(double nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel: negative argument");
  if (x <= kBesselSeriesMax)
    return std::pow(0.5 * x, nu) * bessel_i_reduced_series(nu, x) * std::exp(-x);
  return bessel_i_scaled_asym(nu, x);
}

double bessel_quarter(BesselKind kind, double order, double x) {
  const double a = std::abs(order);
  if (a != 0.25 && a != 0.75)
    throw usage_error("bessel_quarter: order must be +-1/4 (or +-3/4 internally)");
  if (x < 0.0) throw std::domain_error("bessel_quarter: negative argument");
  if (kind == BesselKind::I) {
    if (x == 0.0) {
      if (order > 0.0) return 0.0;
      throw std::domain_error("bessel_quarter: I_{-nu} diverges at x=0");
    }
    if (x <= kBesselSeriesMax)
      return std::pow(0.5 * x, order) * bessel_i_reduced_series(order, x);
    if (x > 700.0) throw std::range_error("bessel_quarter: I overflow");
    return bessel_i_scaled_asym(order, x) * std::exp(x);
  }
  // K_nu = K_{-nu}
  if (x == 0.0) throw std::domain_error("bessel_quarter: K diverges at x=0");
  const double nu = a;
  if (x <= 5.0) {
    // Reflection off the I pair; cancellation costs ~4 digits at x=5, still
    // comfortably beyond 10 significant digits.
    const double im = std::pow(0.5 * x, -nu) * bessel_i_reduced_series(-nu, x);
    const double ip = std::pow(0.5 * x, nu) * bessel_i_reduced_series(nu, x);
    return 0.5 * kPi * (im - ip) / std::sin(kPi * nu);
  }
  if (x < 12.0) {
    // K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt, truncated where the
    // integrand underflows.
    const double tmax = std::acosh(745.0 / x);
    auto f = [&](double t) -> Complex {
      return Complex(std::exp(-x * std::cosh(t)) * std::cosh(nu * t), 0.0);
    };
    return integrate_adaptive(f, 0.0, tmax, 1e-13 * std::exp(-x)).value.real();
  }
  return bessel_k_scaled_asym(nu, x) * std::exp(-x);
}

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  Complex value;
  double err;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex resk = kWgk[7] * fc;
  Complex resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const Complex f1 = f(c - h * kXgk[j]);
    const Complex f2 = f(c + h * kXgk[j]);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  resk *= h;
  resg *= h;
  return {resk, std::abs(resk - resg)};
}

struct AdaptiveState {
  const std::function<Complex(double)>* f;
  double total_len;
  double tol;
  Complex value{0.0, 0.0};
  double err = 0.0;
  std::int64_t evals = 0;
  bool depth_exhausted = false;
};

void adapt(AdaptiveState& st, double a, double b, int depth) {
  const PanelResult r = gk15(*st.f, a, b);
  st.evals += 15;
  const double local_tol = st.tol * ((b - a) / st.total_len);
  if (r.err <= local_tol || depth >= 50) {
    if (depth >= 50 && r.err > local_tol) st.depth_exhausted = true;
    st.value += r.value;
    st.err += r.err;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(st, a, m, depth + 1);
  adapt(st, m, b, depth + 1);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b, double tol) {
  if (!(tol > 0.0)) throw usage_error("integrate_adaptive: tol must be > 0");
  if (a == b) return {Complex(0.0, 0.0), 0.0, 1};
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  AdaptiveState st;
  st.f = &f;
  st.total_len = b - a;
  st.tol = tol;
  adapt(st, a, b, 0);
  st.value *= sign;
  if (!std::isfinite(st.value.real()) || !std::isfinite(st.value.imag()))
    throw accuracy_error("integrate_adaptive: non-finite result", st.value, st.err);
  if (st.depth_exhausted && st.err > tol)
    throw accuracy_error("integrate_adaptive: tolerance not reached", st.value,
                         st.err);
  return {st.value, st.err, st.evals};
}

double hermite(int n, double x) {
  if (n < 0) throw usage_error("hermite: n must be >= 0");
  double hm = 1.0;  // H_0
  if (n == 0) return hm;
  double h = 2.0 * x;  // H_1
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

}  // namespace qproxy
