#include "qproxy/presets.hpp"

#include <cmath>
#include <filesystem>

#include "qproxy/io.hpp"
#include "qproxy/nonrel.hpp"

namespace qproxy {
namespace {

PacketSpec make_spec(double m, double k0) {
  PacketSpec s;
  s.mass = m;
  s.k0 = k0;
  return s;
}

// Figure-resolution axes.  The default covers the massless closed forms at
// full density; quadrature-backed presets drop to the coarse variant.
std::vector<double> default_x() { return linspace_step(-12.0, 12.0, 0.02); }
std::vector<double> default_t() { return linspace_step(-8.0, 8.0, 0.05); }
std::vector<double> coarse_x() { return linspace_step(-12.0, 12.0, 0.05); }
std::vector<double> coarse_t() { return linspace_step(-8.0, 8.0, 0.25); }

CheckRecord record_near(const std::string& name, double measured,
                        double expected, double tol) {
  CheckRecord r{name, measured, expected, tol, false, ""};
  r.pass = std::abs(measured - expected) <= tol * std::max(1.0, std::abs(expected));
  return r;
}

void add_min_value(AnalysisReport& report, const DensityGrid& grid,
                   const std::string& ch) {
  double lo = 0.0;
  for (double v : grid.channels.at(ch)) lo = std::min(lo, v);
  CheckRecord r{"min_" + ch, lo, 0.0, 0.0, true, "informational"};
  report.checks.push_back(r);
}

ScenarioResult oscillator_preset(int n) {
  ScenarioResult res;
  OscillatorScenario scn;
  scn.n = n;
  scn.ell = 1.0;
  scn.mass_SI = si::electron_mass;
  scn.frequency_Hz = 727.0;
  DensityGrid grid = oscillator_compare(scn, linspace_step(-6.0, 6.0, 0.01));
  const double I_born = integrate_channel(grid, channel::born, 0, 1e-8);
  const double I_h = integrate_channel(grid, channel::oscillator_h_n, 0, 1e-8);
  res.report.provenance["scenario"] = "fig-osc-n" + std::to_string(n);
  res.report.checks.push_back(record_near("int_born", I_born, 1.0, 1e-6));
  res.report.checks.push_back(record_near("int_h_n", I_h, 1.0, 1e-6));
  res.grids.emplace_back("densities", std::move(grid));
  return res;
}

ScenarioResult free_gauss_preset() {
  ScenarioResult res;
  // t = m dx^2 / hbar: late enough that the spreading and the h~ sign
  // structure are both visible.
  DensityGrid grid =
      free_gaussian_compare(1.0, 1.0, 1.0, linspace_step(-10.0, 10.0, 0.01));
  res.report.provenance["scenario"] = "fig-free-gauss";
  res.report.checks.push_back(record_near(
      "int_born", integrate_channel(grid, channel::born, 0, 1e-8), 1.0, 1e-6));
  res.report.checks.push_back(record_near(
      "int_h_norm", integrate_channel(grid, channel::nonrel_h_norm, 0, 1e-8),
      1.0, 1e-6));
  res.report.checks.push_back(record_near(
      "int_htilde_norm",
      integrate_channel(grid, channel::nonrel_htilde_norm, 0, 1e-8), 1.0,
      1e-6));
  add_min_value(res.report, grid, channel::nonrel_htilde_norm);
  res.grids.emplace_back("densities", std::move(grid));
  return res;
}

ScenarioResult xt_single_channel(const std::string& scenario,
                                 const PacketSpec& spec, const char* ch,
                                 bool coarse) {
  ScenarioResult res;
  DensityGrid grid = evaluate_grid(spec, {ch}, coarse ? coarse_x() : default_x(),
                                   coarse ? coarse_t() : default_t());
  res.report.provenance["scenario"] = scenario;
  add_min_value(res.report, grid, ch);
  res.grids.emplace_back(ch, std::move(grid));
  return res;
}

ScenarioResult neg_regions_preset() {
  ScenarioResult res;
  const PacketSpec spec = make_spec(0.0, 0.0);
  // h~ shows its negative lobes around t = 0; rho needs the packet split
  // apart, t = +-5 dx/c.
  DensityGrid grid = evaluate_grid(
      spec, {channel::pseudo_h_norm, channel::charge_norm}, default_x(),
      {-5.0, 0.0, 5.0});
  res.report.provenance["scenario"] = "fig-neg-regions";
  auto report_regions = [&](const char* ch, std::size_t it) {
    const auto regs = negative_regions(grid, ch, it);
    bool all_outside = !regs.empty();
    double deepest = 0.0;
    for (const auto& r : regs) {
      all_outside &= (r.side == ConeSide::outside);
      deepest = std::min(deepest, r.min_value);
    }
    CheckRecord r;
    r.name = std::string(ch) + "_negative_outside_cone_t" +
             std::to_string(static_cast<int>(grid.t_axis[it]));
    r.measured = static_cast<double>(regs.size());
    r.expected = 1.0;
    r.pass = all_outside;
    r.note = "deepest value " + std::to_string(deepest);
    res.report.checks.push_back(r);
  };
  report_regions(channel::pseudo_h_norm, 1);  // t = 0
  report_regions(channel::charge_norm, 0);    // t = -5
  report_regions(channel::charge_norm, 2);    // t = +5
  res.grids.emplace_back("slices", std::move(grid));
  return res;
}

ScenarioResult compall_preset(const std::string& scenario,
                              const PacketSpec& spec,
                              const std::vector<double>& ts, bool offsets) {
  ScenarioResult res;
  DensityGrid grid = evaluate_grid(
      spec,
      {channel::born, channel::canonical_h_norm, channel::pseudo_h_norm,
       channel::charge_norm},
      default_x(), ts);
  res.report.provenance["scenario"] = scenario;
  for (std::size_t it = 0; it < ts.size(); ++it) {
    CheckRecord r;
    r.name = "proxy_divergence_t" + std::to_string(static_cast<int>(ts[it]));
    r.measured = proxy_divergence(grid, it);
    r.expected = 0.0;
    r.tol = 1.0;
    r.pass = true;
    r.note = "informational";
    res.report.checks.push_back(r);
    if (!offsets) continue;
    for (const char* ch : {channel::born, channel::canonical_h_norm,
                           channel::pseudo_h_norm, channel::charge_norm}) {
      const ConeOffsets off = cone_offset(grid, ch, it);
      if (!off.applicable) continue;
      CheckRecord c;
      c.name = std::string(ch) + "_cone_offset_t" +
               std::to_string(static_cast<int>(ts[it]));
      c.measured = off.right;
      c.expected = 0.0;
      c.tol = spec.delta_x;
      c.pass = std::abs(off.right) <= spec.delta_x &&
               std::abs(off.left) <= spec.delta_x;
      c.note = "left " + std::to_string(off.left);
      res.report.checks.push_back(c);
    }
  }
  res.grids.emplace_back("proxies", std::move(grid));
  return res;
}

ScenarioResult field_parts_preset() {
  ScenarioResult res;
  const PacketSpec spec = make_spec(0.0, 0.0);
  DensityGrid grid = evaluate_grid(
      spec, {"re_psi", "im_psi", "re_phi", "im_phi"}, default_x(), default_t());
  res.report.provenance["scenario"] = "fig-field-parts";
  res.grids.emplace_back("fields", std::move(grid));
  return res;
}

std::vector<Preset> make_registry() {
  std::vector<Preset> reg;
  reg.push_back({"fig-osc-n0", {1}, "oscillator ground state: |psi|^2 vs h_0",
                 [] { return oscillator_preset(0); }});
  reg.push_back({"fig-osc-n1", {2}, "first excited oscillator state",
                 [] { return oscillator_preset(1); }});
  reg.push_back({"fig-free-gauss", {3},
                 "spreading Gaussian: born vs h vs h~ (nonrelativistic)",
                 free_gauss_preset});
  reg.push_back({"fig-h-xt", {4, 11}, "canonical H/E over the (x,t) plane",
                 [] {
                   return xt_single_channel("fig-h-xt", make_spec(0.0, 0.0),
                                            channel::canonical_h_norm, false);
                 }});
  reg.push_back({"fig-tildeh-xt", {5, 8}, "pseudo-density H~/E over (x,t)",
                 [] {
                   return xt_single_channel("fig-tildeh-xt", make_spec(0.0, 0.0),
                                            channel::pseudo_h_norm, false);
                 }});
  reg.push_back({"fig-born-xt", {6, 10}, "|psi|^2 over (x,t)",
                 [] {
                   return xt_single_channel("fig-born-xt", make_spec(0.0, 0.0),
                                            channel::born, false);
                 }});
  reg.push_back({"fig-rho-xt", {7, 9}, "charge density rho/q over (x,t)",
                 [] {
                   return xt_single_channel("fig-rho-xt", make_spec(0.0, 0.0),
                                            channel::charge_norm, false);
                 }});
  reg.push_back({"fig-neg-regions", {8, 9},
                 "negative lobes of H~ and rho, classified against the cone",
                 neg_regions_preset});
  reg.push_back({"fig-compall-t0", {12}, "all four proxies at t = 0",
                 [] {
                   return compall_preset("fig-compall-t0", make_spec(0.0, 0.0),
                                         {0.0}, false);
                 }});
  reg.push_back({"fig-compall-t5", {13},
                 "all four proxies at t = +-5, cone offsets reported",
                 [] {
                   return compall_preset("fig-compall-t5", make_spec(0.0, 0.0),
                                         {-5.0, 5.0}, true);
                 }});
  reg.push_back({"fig-field-parts", {14, 15, 16, 17},
                 "real/imaginary parts of psi and phi over (x,t)",
                 field_parts_preset});
  reg.push_back({"fig-massive-born", {18}, "|psi|^2 for m = 0.2 hbar/(c dx)",
                 [] {
                   return xt_single_channel("fig-massive-born",
                                            make_spec(0.2, 0.0), channel::born,
                                            true);
                 }});
  reg.push_back({"fig-massive-h", {19}, "canonical H/E for m = 0.2",
                 [] {
                   return xt_single_channel("fig-massive-h", make_spec(0.2, 0.0),
                                            channel::canonical_h_norm, true);
                 }});
  reg.push_back({"fig-smallk0-born", {20}, "|psi|^2 for k0 = 0.1/dx",
                 [] {
                   return xt_single_channel("fig-smallk0-born",
                                            make_spec(0.0, 0.1), channel::born,
                                            false);
                 }});
  reg.push_back({"fig-smallk0-h", {21}, "canonical H/E for k0 = 0.1/dx",
                 [] {
                   return xt_single_channel("fig-smallk0-h", make_spec(0.0, 0.1),
                                            channel::canonical_h_norm, true);
                 }});
  reg.push_back({"fig-compall-largek", {22},
                 "all four proxies at k0 = 10/dx, t in {0, 5}",
                 [] {
                   return compall_preset("fig-compall-largek",
                                         make_spec(0.0, 10.0), {0.0, 5.0},
                                         false);
                 }});
  reg.push_back({"fig-h-largek", {23}, "canonical H/E for k0 = 10/dx",
                 [] {
                   return xt_single_channel("fig-h-largek", make_spec(0.0, 10.0),
                                            channel::canonical_h_norm, true);
                 }});
  return reg;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> reg = make_registry();
  return reg;
}

ScenarioResult build_scenario(const std::string& name) {
  for (const Preset& p : preset_registry())
    if (p.name == name) return p.build();
  std::string msg = "unknown scenario '" + name + "'; valid presets:";
  for (const Preset& p : preset_registry()) msg += " " + p.name;
  throw usage_error(msg);
}

ScenarioResult run_scenario(const std::string& name, const std::string& out_dir,
                            const std::string& format) {
  if (format != "csv" && format != "json")
    throw usage_error("run_scenario: format must be 'csv' or 'json'");
  ScenarioResult res = build_scenario(name);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory: " + out_dir +
                             " (" + ec.message() + ")");
  for (const auto& [key, grid] : res.grids) {
    const std::string path =
        (std::filesystem::path(out_dir) / (name + "_" + key + "." + format))
            .string();
    write_file(path, format == "csv" ? grid_to_csv(grid) : grid_to_json(grid));
    res.written_files.push_back(path);
  }
  const std::string report_path =
      (std::filesystem::path(out_dir) / (name + "_report.json")).string();
  write_file(report_path, report_to_json(res.report));
  res.written_files.push_back(report_path);
  return res;
}

}  // namespace qproxy
