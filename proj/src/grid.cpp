#include "qproxy/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qproxy {
namespace {

struct ChannelNeeds {
  bool psi = false;
  bool phi = false;
  bool dirac = false;
};

ChannelNeeds analyze_channels(const std::vector<std::string>& names) {
  ChannelNeeds n;
  for (const std::string& c : names) {
    if (c == channel::born || c == channel::pseudo_h ||
        c == channel::pseudo_h_norm || c == channel::pseudo_p ||
        c == "re_psi" || c == "im_psi") {
      n.psi = true;
    } else if (c == channel::canonical_h || c == channel::canonical_h_norm ||
               c == channel::charge_rho || c == channel::charge_norm ||
               c == channel::canonical_p || c == "re_phi" || c == "im_phi") {
      n.phi = true;
    } else if (c == channel::dirac_charge_norm ||
               c == channel::dirac_canonical_h_norm) {
      n.dirac = true;
    } else {
      throw usage_error("evaluate_grid: unknown channel '" + c + "'");
    }
  }
  return n;
}

double pick_value(const std::string& c, const FieldSample& psi,
                  const FieldSample& phi, bool have_psi, bool have_phi,
                  const Dirac2DDensities& dd, bool have_dirac, double E,
                  double q, double m) {
  if (c == channel::born) return std::norm(psi.value);
  if (c == "re_psi") return psi.value.real();
  if (c == "im_psi") return psi.value.imag();
  if (c == "re_phi") return phi.value.real();
  if (c == "im_phi") return phi.value.imag();
  if (c == channel::pseudo_h || c == channel::pseudo_h_norm) {
    const double h = -std::imag(std::conj(psi.value) * psi.d_t);
    return c == channel::pseudo_h ? h : h / E;
  }
  if (c == channel::canonical_h || c == channel::canonical_h_norm) {
    const double h =
        std::norm(phi.d_t) + std::norm(phi.d_x) + m * m * std::norm(phi.value);
    return c == channel::canonical_h ? h : h / E;
  }
  if (c == channel::charge_rho || c == channel::charge_norm) {
    const double r = -2.0 * std::imag(std::conj(phi.value) * phi.d_t);
    return c == channel::charge_rho ? q * r : r;
  }
  if (c == channel::pseudo_p) return std::imag(std::conj(psi.value) * psi.d_x);
  if (c == channel::canonical_p)
    return -2.0 * std::real(std::conj(phi.d_t) * phi.d_x);
  if (c == channel::dirac_charge_norm) return dd.rho_over_q;
  if (c == channel::dirac_canonical_h_norm) return dd.h_canonical / E;
  (void)have_psi;
  (void)have_phi;
  (void)have_dirac;
  throw usage_error("evaluate_grid: unknown channel '" + c + "'");
}

}  // namespace

std::vector<double> linspace_step(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo))
    throw usage_error("linspace: need min <= max and step > 0");
  std::vector<double> v;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(lo + static_cast<double>(i) * step);
  return v;
}

DensityGrid evaluate_grid(const PacketSpec& spec,
                          const std::vector<std::string>& channels,
                          const std::vector<double>& x_axis,
                          const std::vector<double>& t_axis, Method method,
                          double tol, GridPolicy policy) {
  spec.validate();
  if (channels.empty()) throw usage_error("evaluate_grid: no channels requested");
  const ChannelNeeds needs = analyze_channels(channels);
  if (needs.dirac && spec.species != Species::dirac2d)
    throw usage_error("evaluate_grid: dirac channels need a dirac2d spec");
  if (method == Method::closed_form) {
    PacketSpec scalar = spec;
    scalar.species = Species::scalar;
    if ((needs.psi || needs.dirac) && !psi_has_closed_form(scalar))
      throw capability_error("evaluate_grid: no closed form for psi with m > 0");
    if (needs.phi && !phi_has_closed_form(scalar))
      throw capability_error("evaluate_grid: no closed form for phi with m > 0 or k0 != 0");
  }

  PacketSpec scalar = spec;
  scalar.species = Species::scalar;
  const Observables obs = observables(scalar, std::min(tol, 1e-10));

  DensityGrid grid;
  grid.x_axis = x_axis;
  grid.t_axis = t_axis;
  grid.meta.spec = spec;
  grid.meta.tol = tol;
  grid.meta.method = method == Method::automatic
                         ? "auto"
                         : (method == Method::closed_form ? "closed" : "quad");
  const std::size_t nx = x_axis.size();
  const std::size_t nt = t_axis.size();
  for (const std::string& c : channels)
    grid.channels[c] = std::vector<double>(nx * nt, 0.0);

  std::vector<std::vector<double>*> out;
  out.reserve(channels.size());
  for (const std::string& c : channels) out.push_back(&grid.channels[c]);

  const auto total = static_cast<std::int64_t>(nx * nt);
  std::exception_ptr failure = nullptr;

  auto body = [&](std::int64_t idx) {
    const std::size_t it = static_cast<std::size_t>(idx) / nx;
    const std::size_t ix = static_cast<std::size_t>(idx) % nx;
    const double x = x_axis[ix];
    const double t = t_axis[it];
    FieldSample psi, phi;
    Dirac2DDensities dd;
    if (needs.psi) psi = psi_x(scalar, x, t, method, tol);
    if (needs.phi) phi = phi_x(scalar, x, t, method, tol);
    if (needs.dirac) dd = dirac2d_single_particle(spec, x, t, method, tol);
    for (std::size_t c = 0; c < channels.size(); ++c)
      (*out[c])[static_cast<std::size_t>(idx)] =
          pick_value(channels[c], psi, phi, needs.psi, needs.phi, dd,
                     needs.dirac, obs.energy_E, spec.charge_q, spec.mass);
  };

  if (policy == GridPolicy::openmp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      try {
        body(idx);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (std::int64_t idx = 0; idx < total; ++idx) body(idx);
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace qproxy
