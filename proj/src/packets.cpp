#include "qproxy/packets.hpp"

#include <cmath>

namespace qproxy {
namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double omega(const PacketSpec& spec, double k) {
  if (spec.mass == 0.0) return std::abs(k);
  return std::hypot(k, spec.mass);
}

Complex amplitude_k(const PacketSpec& spec, double k, double t) {
  const double dx = spec.delta_x;
  const double d = k - spec.k0;
  const double env =
      std::pow(2.0 * dx * dx / kPi, 0.25) * std::exp(-dx * dx * d * d);
  const double ph = -omega(spec, k) * t;
  return env * Complex(std::cos(ph), std::sin(ph));
}

KWindow k_window(const PacketSpec& spec) {
  const double half = kEnvelopeCutoff / spec.delta_x;
  return {spec.k0 - half, spec.k0 + half};
}

Observables observables(const PacketSpec& spec, double tol) {
  spec.validate();
  const KWindow w = k_window(spec);
  auto density = [&](double k) { return std::norm(amplitude_k(spec, k, 0.0)); };

  // Split at k=0 where the massless |k| kink sits.
  auto integrate = [&](auto&& f) {
    auto g = [&](double k) { return Complex(f(k), 0.0); };
    double total = 0.0;
    if (w.lo < 0.0 && w.hi > 0.0) {
      total += integrate_adaptive(g, w.lo, 0.0, 0.5 * tol).value.real();
      total += integrate_adaptive(g, 0.0, w.hi, 0.5 * tol).value.real();
    } else {
      total += integrate_adaptive(g, w.lo, w.hi, tol).value.real();
    }
    return total;
  };

  Observables out;
  out.norm = integrate([&](double k) { return density(k); });
  out.energy_E = integrate([&](double k) { return omega(spec, k) * density(k); });
  out.momentum_p = integrate([&](double k) { return k * density(k); });
  out.charge_Q = spec.charge_q * out.norm;
  if (spec.mass == 0.0 && spec.k0 == 0.0)
    out.closed_massless_energy = 1.0 / std::sqrt(2.0 * kPi * spec.delta_x * spec.delta_x);
  return out;
}

std::map<std::string, std::string> serialize_spec(const PacketSpec& spec) {
  char buf[32];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  return {{"delta_x", fmt(spec.delta_x)},
          {"k0", fmt(spec.k0)},
          {"mass", fmt(spec.mass)},
          {"charge_q", fmt(spec.charge_q)},
          {"species", spec.species == Species::scalar ? "scalar" : "dirac2d"}};
}

PacketSpec deserialize_spec(const std::map<std::string, std::string>& kv) {
  PacketSpec spec;
  auto get = [&](const char* key, double dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stod(it->second);
  };
  spec.delta_x = get("delta_x", 1.0);
  spec.k0 = get("k0", 0.0);
  spec.mass = get("mass", 0.0);
  spec.charge_q = get("charge_q", 1.0);
  auto it = kv.find("species");
  if (it != kv.end()) {
    if (it->second == "scalar")
      spec.species = Species::scalar;
    else if (it->second == "dirac2d")
      spec.species = Species::dirac2d;
    else
      throw usage_error("unknown species: " + it->second);
  }
  spec.validate();
  return spec;
}

}  // namespace qproxy
