#include <cmath>

#include "doctest.h"
#include "qproxy/grid.hpp"

using namespace qproxy;

TEST_SUITE("grid") {

TEST_CASE("linspace_step") {
  const auto v = linspace_step(-1.0, 1.0, 0.5);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == -1.0);
  CHECK(v.back() == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)linspace_step(1.0, -1.0, 0.5), usage_error);
  CHECK_THROWS_AS((void)linspace_step(-1.0, 1.0, 0.0), usage_error);
}

TEST_CASE("grid values match pointwise evaluation") {
  PacketSpec spec;
  const auto xs = linspace_step(-3.0, 3.0, 0.5);
  const std::vector<double> ts = {0.0, 2.0};
  const DensityGrid g = evaluate_grid(
      spec, {channel::born, channel::canonical_h_norm, "re_psi", "im_phi"}, xs,
      ts);
  const Observables obs = observables(spec);
  for (std::size_t it = 0; it < ts.size(); ++it) {
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      const FieldSample psi = psi_x(spec, xs[ix], ts[it]);
      const FieldSample phi = phi_x(spec, xs[ix], ts[it]);
      CHECK(g.at(channel::born, it, ix) == std::norm(psi.value));
      CHECK(g.at("re_psi", it, ix) == psi.value.real());
      CHECK(g.at("im_phi", it, ix) == phi.value.imag());
      const double h = std::norm(phi.d_t) + std::norm(phi.d_x);
      CHECK(g.at(channel::canonical_h_norm, it, ix) ==
            doctest::Approx(h / obs.energy_E).epsilon(1e-12));
    }
  }
}

TEST_CASE("parallel and serial paths are bit-identical") {
  PacketSpec spec;
  spec.k0 = 1.0;  // quadrature phi: the harder path
  const auto xs = linspace_step(-4.0, 4.0, 0.25);
  const std::vector<double> ts = {0.0, 1.0};
  const std::vector<std::string> chans = {
      channel::born, channel::canonical_h_norm, channel::pseudo_h_norm,
      channel::charge_norm};
  const DensityGrid par =
      evaluate_grid(spec, chans, xs, ts, Method::automatic, 1e-10, GridPolicy::openmp);
  const DensityGrid ser =
      evaluate_grid(spec, chans, xs, ts, Method::automatic, 1e-10, GridPolicy::serial);
  for (const std::string& c : chans) {
    const auto& a = par.channels.at(c);
    const auto& b = ser.channels.at(c);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("repeated evaluation is deterministic") {
  PacketSpec spec;
  const auto xs = linspace_step(-5.0, 5.0, 0.1);
  const DensityGrid a =
      evaluate_grid(spec, {channel::pseudo_h_norm}, xs, {0.5});
  const DensityGrid b =
      evaluate_grid(spec, {channel::pseudo_h_norm}, xs, {0.5});
  const auto& va = a.channels.at(channel::pseudo_h_norm);
  const auto& vb = b.channels.at(channel::pseudo_h_norm);
  for (std::size_t i = 0; i < va.size(); ++i) CHECK(va[i] == vb[i]);
}

TEST_CASE("errors") {
  PacketSpec spec;
  const auto xs = linspace_step(-1.0, 1.0, 0.5);
  CHECK_THROWS_AS(
      (void)evaluate_grid(spec, {"no_such_channel"}, xs, {0.0}),
      usage_error);
  CHECK_THROWS_AS((void)evaluate_grid(spec, {}, xs, {0.0}), usage_error);

  PacketSpec massive;
  massive.mass = 0.5;
  CHECK_THROWS_AS((void)evaluate_grid(massive, {channel::born}, xs, {0.0},
                                      Method::closed_form),
                  capability_error);

  // dirac channels need a dirac2d spec
  CHECK_THROWS_AS(
      (void)evaluate_grid(spec, {channel::dirac_charge_norm}, xs, {0.0}),
      usage_error);
}

}  // TEST_SUITE
