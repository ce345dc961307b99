#include "qproxy/dirac.hpp"

#include <cmath>

namespace qproxy {
namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Vec2 = std::array<Complex, 2>;

constexpr Mat2 kGamma0{{{Complex(-1.0, 0.0), Complex(0.0, 0.0)},
                        {Complex(0.0, 0.0), Complex(1.0, 0.0)}}};
constexpr Mat2 kGamma1{{{Complex(0.0, 0.0), Complex(1.0, 0.0)},
                        {Complex(-1.0, 0.0), Complex(0.0, 0.0)}}};

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Vec2 apply(const Mat2& a, const Vec2& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

Complex inner(const Vec2& a, const Vec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

}  // namespace

Spinor4 spinor(SpinorBranch branch, const std::array<double, 3>& k, double s,
               double m) {
  if (s != 0.5 && s != -0.5) throw usage_error("spinor: s must be +-1/2");
  if (m < 0.0) throw usage_error("spinor: m must be >= 0");
  const double kk = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  if (m == 0.0 && kk == 0.0)
    throw std::domain_error("spinor: E + mc^2 vanishes for m = 0, k = 0");
  const double E = std::hypot(kk, m);
  const double den = 1.0 / std::sqrt(2.0 * E * (E + m));
  const Complex kplus(k[0], k[1]);
  const Complex kminus(k[0], -k[1]);
  const double k3 = k[2];
  const double w = E + m;

  Spinor4 out;
  out.k = k;
  out.s = s;
  out.branch = branch;
  if (branch == SpinorBranch::u) {
    if (s > 0.0)
      out.components = {Complex(w, 0.0), Complex(0.0, 0.0), Complex(k3, 0.0), kplus};
    else
      out.components = {Complex(0.0, 0.0), Complex(w, 0.0), kminus, Complex(-k3, 0.0)};
  } else {
    if (s > 0.0)
      out.components = {kminus, Complex(-k3, 0.0), Complex(0.0, 0.0), Complex(w, 0.0)};
    else
      out.components = {Complex(k3, 0.0), kplus, Complex(w, 0.0), Complex(0.0, 0.0)};
  }
  for (Complex& c : out.components) c *= den;
  return out;
}

Dirac2DDensities dirac2d_single_particle(const PacketSpec& spec, double x,
                                         double t, Method method, double tol) {
  if (spec.species != Species::dirac2d)
    throw usage_error("dirac2d_single_particle: spec.species must be dirac2d");
  if (spec.mass != 0.0)
    throw capability_error("dirac2d_single_particle: massless case only");

  PacketSpec scalar = spec;
  scalar.species = Species::scalar;
  const FieldSample psi = psi_x(scalar, x, t, method, tol);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Vec2 phi{psi.value * inv_sqrt2, psi.value * inv_sqrt2};
  const Vec2 phi_t{psi.d_t * inv_sqrt2, psi.d_t * inv_sqrt2};

  // On-shell spatial derivative from the massless Dirac equation
  // gamma^0 d_t phi + c gamma^1 d_x phi = 0  =>  d_x phi = gamma^1 gamma^0 d_t phi.
  const Mat2 g1g0 = mul(kGamma1, kGamma0);
  const Mat2 g0g1 = mul(kGamma0, kGamma1);
  const Vec2 phi_x = apply(g1g0, phi_t);

  Dirac2DDensities d;
  d.rho_over_q = inner(phi, phi).real();
  // (hbar c / 2i) (phi+ g0 g1 d_x phi - (d_x phi)+ g0 g1 phi)
  const Complex a = inner(phi, apply(g0g1, phi_x));
  const Complex b = inner(phi_x, apply(g0g1, phi));
  d.h_canonical = (Complex(0.0, -0.5) * (a - b)).real();
  d.h_pseudo = -std::imag(std::conj(psi.value) * psi.d_t);
  return d;
}

}  // namespace qproxy
