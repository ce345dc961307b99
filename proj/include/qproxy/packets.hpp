#pragma once

#include <map>
#include <optional>
#include <string>

#include "qproxy/numerics.hpp"

namespace qproxy {

// Internal units: hbar = c = 1, lengths in units of delta_x's unit, times in
// length/c, energies in hbar c / length.  (Every paper figure is axis-labeled
// in these units.)

enum class Species { scalar, dirac2d };

struct PacketSpec {
  double delta_x = 1.0;  // Gaussian width parameter, Delta_k = 1/(2 delta_x)
  double k0 = 0.0;       // center wavenumber
  double mass = 0.0;     // in hbar/(c delta_x-unit)
  double charge_q = 1.0;
  Species species = Species::scalar;

  void validate() const {
    if (!(delta_x > 0.0)) throw usage_error("PacketSpec: delta_x must be > 0");
    if (mass < 0.0) throw usage_error("PacketSpec: mass must be >= 0");
  }
};

// Gaussian envelope truncation: |k - k0| beyond this many 1/delta_x means the
// envelope is below 1e-18 of its peak.
constexpr double kEnvelopeCutoff = 6.5;

struct Observables {
  double norm = 0.0;
  double energy_E = 0.0;
  double momentum_p = 0.0;
  double charge_Q = 0.0;
  // Closed value hbar c / sqrt(2 pi delta_x^2), present for m=0, k0=0 only.
  std::optional<double> closed_massless_energy;
};

double omega(const PacketSpec& spec, double k);

// psi(k,t) = (2 delta_x^2/pi)^{1/4} exp(-delta_x^2 (k-k0)^2) exp(-i omega t)
Complex amplitude_k(const PacketSpec& spec, double k, double t);

// k-window outside which the envelope is negligible.
struct KWindow {
  double lo, hi;
};
KWindow k_window(const PacketSpec& spec);

Observables observables(const PacketSpec& spec, double tol = 1e-10);

// Flat key-value record used in CLI config and output metadata.
std::map<std::string, std::string> serialize_spec(const PacketSpec& spec);
PacketSpec deserialize_spec(const std::map<std::string, std::string>& kv);

}  // namespace qproxy
