#include <cmath>

#include "doctest.h"
#include "qproxy/analysis.hpp"

using namespace qproxy;

namespace {

DensityGrid synthetic_grid(const std::vector<double>& xs,
                           const std::vector<double>& ts,
                           const std::string& ch,
                           const std::function<double(double, double)>& f) {
  DensityGrid g;
  g.x_axis = xs;
  g.t_axis = ts;
  std::vector<double>& data = g.channels[ch];
  data.resize(xs.size() * ts.size());
  for (std::size_t it = 0; it < ts.size(); ++it)
    for (std::size_t ix = 0; ix < xs.size(); ++ix)
      data[g.index(it, ix)] = f(xs[ix], ts[it]);
  return g;
}

double gauss(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("channel integration") {
  const auto xs = linspace_step(-10.0, 10.0, 0.01);
  const DensityGrid g = synthetic_grid(
      xs, {0.0}, "born", [](double x, double) { return std::exp(-x * x); });
  CHECK(integrate_channel(g, "born", 0) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));

  // even sample count exercises the trapezoid patch
  std::vector<double> even_xs = xs;
  even_xs.pop_back();
  const DensityGrid ge = synthetic_grid(
      even_xs, {0.0}, "born", [](double x, double) { return std::exp(-x * x); });
  CHECK(integrate_channel(ge, "born", 0) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));

  // truncated tails must not integrate silently
  const DensityGrid bad = synthetic_grid(
      linspace_step(-1.0, 1.0, 0.01), {0.0}, "born",
      [](double x, double) { return std::exp(-x * x); });
  CHECK_THROWS_AS((void)integrate_channel(bad, "born", 0), boundary_leak_error);
}

TEST_CASE("negative interval detection and cone classification") {
  const auto xs = linspace_step(-12.0, 12.0, 0.01);
  // positive hump inside the cone, two shallow dips well outside it (t = 4)
  auto f = [](double x, double) {
    return gauss(x, 0.0, 1.0) - 0.01 * std::exp(-4.0 * (x - 7.0) * (x - 7.0)) -
           0.01 * std::exp(-4.0 * (x + 7.0) * (x + 7.0));
  };
  const DensityGrid g = synthetic_grid(xs, {4.0}, "pseudo_h_norm", f);
  const auto regs = negative_regions(g, "pseudo_h_norm", 0, 1e-4);
  REQUIRE(regs.size() == 2);
  for (const NegativeInterval& r : regs) {
    CHECK(r.side == ConeSide::outside);
    CHECK(r.min_value < 0.0);
    CHECK(std::abs(0.5 * (r.x_lo + r.x_hi)) == doctest::Approx(7.0).epsilon(0.05));
  }

  // a dip straddling the cone edge is flagged as such
  auto fs = [](double x, double) {
    return gauss(x, 0.0, 1.0) - 0.01 * std::exp(-4.0 * (x - 4.0) * (x - 4.0));
  };
  const DensityGrid gs = synthetic_grid(xs, {4.0}, "pseudo_h_norm", fs);
  const auto sregs = negative_regions(gs, "pseudo_h_norm", 0, 1e-4);
  REQUIRE(sregs.size() == 1);
  CHECK(sregs[0].side == ConeSide::straddling);

  // nothing below the floor: empty result
  const DensityGrid clean = synthetic_grid(
      xs, {4.0}, "pseudo_h_norm", [](double x, double) { return gauss(x, 0.0, 1.0); });
  CHECK(negative_regions(clean, "pseudo_h_norm", 0).empty());
}

TEST_CASE("cone offsets of a bimodal slice") {
  const auto xs = linspace_step(-12.0, 12.0, 0.02);
  auto f = [](double x, double) {
    return gauss(x, 4.7, 0.8) + gauss(x, -4.7, 0.8);
  };
  const DensityGrid g = synthetic_grid(xs, {5.0}, "born", f);
  const ConeOffsets off = cone_offset(g, "born", 0);
  REQUIRE(off.applicable);
  CHECK(off.right == doctest::Approx(0.3).epsilon(1e-3));
  CHECK(off.left == doctest::Approx(0.3).epsilon(1e-3));

  // unimodal slice at small t: not applicable
  const DensityGrid uni = synthetic_grid(
      xs, {0.5}, "born", [](double x, double) { return gauss(x, 0.0, 1.0); });
  CHECK_FALSE(cone_offset(uni, "born", 0).applicable);
}

TEST_CASE("proxy divergence") {
  const auto xs = linspace_step(-10.0, 10.0, 0.05);
  auto base = [](double x, double) { return gauss(x, 2.0, 1.0); };
  DensityGrid g = synthetic_grid(xs, {2.0}, "born", base);
  for (const char* ch : {"canonical_h_norm", "pseudo_h_norm", "charge_norm"})
    g.channels[ch] = g.channels["born"];
  CHECK(proxy_divergence(g, 0) == doctest::Approx(0.0));

  // perturb one channel by a known bump
  const double peak = gauss(2.0, 2.0, 1.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    g.channels["charge_norm"][i] += 1e-3 * std::exp(-(xs[i] - 2.0) * (xs[i] - 2.0));
  // the bump also raises the common peak slightly, hence the loose epsilon
  CHECK(proxy_divergence(g, 0) == doctest::Approx(1e-3 / peak).epsilon(1e-2));
}

TEST_CASE("centroid velocity and variance growth") {
  const auto xs = linspace_step(-20.0, 20.0, 0.01);
  auto f = [](double x, double t) { return gauss(x, 0.5 * t, 1.0); };
  const DensityGrid g = synthetic_grid(xs, {0.0, 2.0}, "canonical_h_norm", f);
  CHECK(centroid_velocity(g, "canonical_h_norm", 0, 1) ==
        doctest::Approx(0.5).epsilon(1e-8));
  const auto vars = variance_growth(g, "canonical_h_norm", {0, 1});
  REQUIRE(vars.size() == 2);
  CHECK(vars[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(vars[1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("line integrals with tail extrapolation") {
  const std::vector<LineSegment> sched = {
      {10.0, 0.01}, {20.0, 0.02}, {40.0, 0.05}, {80.0, 0.1}, {160.0, 0.2}};
  auto f = [](double x) -> std::vector<double> {
    return {std::exp(-x * x), 1.0 / (1.0 + x * x)};
  };
  const std::vector<double> I = line_integral_extrapolated(f, 2, sched);
  REQUIRE(I.size() == 2);
  CHECK(I[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
  // plain truncation at X = 160 would be off by 2/160 = 1.25e-2
  CHECK(I[1] == doctest::Approx(M_PI).epsilon(1e-7));

  const std::vector<double> serial = line_integral_extrapolated(f, 2, sched, false);
  CHECK(I[0] == serial[0]);
  CHECK(I[1] == serial[1]);
}

}  // TEST_SUITE
