#include "qproxy/synthesis.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace qproxy {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438187;

// Same G7K15 constants as integrate_adaptive, applied to a 3-vector integrand
// so value/d_t/d_x share one set of function evaluations.
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

using Triple = std::array<Complex, 3>;

struct Ctx {
  const std::function<Complex(double)>* weight;
  const std::function<double(double)>* omega;
  double x, t;
};

// Integrand in the mapped variable.  mode 0: direct k; mode +1: k = u^2;
// mode -1: k = -u^2 (both with Jacobian 2u folded in).
Triple eval(const Ctx& c, int mode, double v) {
  double k, jac;
  if (mode == 0) {
    k = v;
    jac = 1.0;
  } else {
    k = mode * v * v;
    jac = 2.0 * v;
  }
  const double w = (*c.omega)(k);
  const double phase = k * c.x - w * c.t;
  const Complex base =
      jac * (*c.weight)(k)*Complex(std::cos(phase), std::sin(phase));
  return {base, Complex(0.0, -w) * base, Complex(0.0, k) * base};
}

struct Panel3 {
  Triple val;
  double err;
};

Panel3 gk15_3(const Ctx& c, int mode, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Triple resk, resg;
  const Triple fc = eval(c, mode, mid);
  for (int q = 0; q < 3; ++q) {
    resk[q] = kWgk[7] * fc[q];
    resg[q] = kWg[3] * fc[q];
  }
  for (int j = 0; j < 7; ++j) {
    const Triple f1 = eval(c, mode, mid - h * kXgk[j]);
    const Triple f2 = eval(c, mode, mid + h * kXgk[j]);
    for (int q = 0; q < 3; ++q) {
      resk[q] += kWgk[j] * (f1[q] + f2[q]);
      if (j % 2 == 1) resg[q] += kWg[j / 2] * (f1[q] + f2[q]);
    }
  }
  double err = 0.0;
  for (int q = 0; q < 3; ++q) {
    resk[q] *= h;
    resg[q] *= h;
    err = std::max(err, std::abs(resk[q] - resg[q]));
  }
  return {resk, err};
}

struct Accum {
  Triple val{Complex{}, Complex{}, Complex{}};
  double err = 0.0;
  std::int64_t evals = 0;
  bool exhausted = false;
};

void adapt3(const Ctx& c, int mode, double a, double b, double tol, int depth,
            Accum& acc) {
  const Panel3 r = gk15_3(c, mode, a, b);
  acc.evals += 15;
  if (r.err <= tol || depth >= 30) {
    if (depth >= 30 && r.err > tol) acc.exhausted = true;
    for (int q = 0; q < 3; ++q) acc.val[q] += r.val[q];
    acc.err += r.err;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt3(c, mode, a, m, 0.5 * tol, depth + 1, acc);
  adapt3(c, mode, m, b, 0.5 * tol, depth + 1, acc);
}

struct Segment {
  int mode;        // 0 direct, +-1 substituted
  double lo, hi;   // in the mapped variable
  double rate;     // bound on |d(phase)/d(mapped variable)|
};

}  // namespace

SynthesisSample synthesize_sample(const std::function<Complex(double)>& weight,
                                  double klo, double khi, double x, double t,
                                  const std::function<double(double)>& dispersion,
                                  double tol, double omega_prime_max) {
  if (!(khi > klo)) throw usage_error("synthesize: empty k window");
  Ctx ctx{&weight, &dispersion, x, t};

  const double drift = std::abs(x) + std::abs(t) * omega_prime_max;
  std::vector<Segment> segs;
  auto add_sub = [&](int mode, double kmax_abs) {
    const double s = std::sqrt(kmax_abs);
    segs.push_back({mode, 0.0, s, 2.0 * s * drift});
  };
  if (klo < 0.0 && khi > 0.0) {
    add_sub(-1, -klo);
    add_sub(+1, khi);
  } else if (klo == 0.0) {
    add_sub(+1, khi);
  } else if (khi == 0.0) {
    add_sub(-1, -klo);
  } else {
    segs.push_back({0, klo, khi, drift});
  }

  // Initial panel list: phase change per panel below pi/2.
  struct Init {
    int mode;
    double a, b;
  };
  std::vector<Init> panels;
  for (const Segment& s : segs) {
    const double len = s.hi - s.lo;
    const double hmax = (s.rate > 0.0) ? (0.5 * kPi) / s.rate : len;
    int n = std::max(8, static_cast<int>(std::ceil(len / hmax)));
    const double h = len / n;
    for (int i = 0; i < n; ++i)
      panels.push_back({s.mode, s.lo + i * h, s.lo + (i + 1) * h});
  }

  Accum acc;
  const double tol_panel = tol / static_cast<double>(panels.size());
  for (const Init& p : panels) adapt3(ctx, p.mode, p.a, p.b, tol_panel, 0, acc);

  SynthesisSample out;
  out.value = kInvSqrt2Pi * acc.val[0];
  out.d_t = kInvSqrt2Pi * acc.val[1];
  out.d_x = kInvSqrt2Pi * acc.val[2];
  out.abs_error_estimate = kInvSqrt2Pi * acc.err;
  out.evaluations = acc.evals;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw accuracy_error("synthesize: non-finite result", out.value, out.abs_error_estimate);
  if (acc.exhausted && out.abs_error_estimate > tol)
    throw accuracy_error("synthesize: tolerance not reached", out.value,
                         out.abs_error_estimate);
  return out;
}

Complex synthesize(const std::function<Complex(double)>& weight, double x,
                   double t, const std::function<double(double)>& dispersion,
                   double tol, double klo, double khi) {
  return synthesize_sample(weight, klo, khi, x, t, dispersion, tol).value;
}

}  // namespace qproxy
