#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qproxy/checks.hpp"
#include "qproxy/io.hpp"
#include "qproxy/presets.hpp"

namespace {

using namespace qproxy;

// QPROXY_CONFIG points at a flat key=value file supplying option defaults;
// explicit flags win.
std::map<std::string, std::string> load_config() {
  std::map<std::string, std::string> cfg;
  const char* path = std::getenv("QPROXY_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream f(path);
  if (!f) throw std::runtime_error(std::string("cannot read config file: ") + path);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line is not key=value: " + line);
    cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return cfg;
}

void apply_default(const std::map<std::string, std::string>& cfg,
                   const std::string& key, CLI::Option* opt) {
  const auto it = cfg.find(key);
  if (it != cfg.end()) {
    opt->default_val(it->second);
    opt->force_callback();
  }
}

std::vector<double> parse_axis(const std::string& s, const std::string& what) {
  double lo, hi, step;
  char extra;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3)
    throw usage_error("--" + what + " expects min:max:step, got '" + s + "'");
  return linspace_step(lo, hi, step);
}

std::vector<std::string> split_channels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  if (out.empty()) throw usage_error("--channels: empty channel list");
  return out;
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::automatic;
  if (s == "closed") return Method::closed_form;
  if (s == "quad") return Method::quadrature;
  throw usage_error("--method must be auto, closed or quad");
}

int run(int argc, char** argv) {
  const auto cfg = load_config();

  CLI::App app{"position-proxy densities for relativistic wave packets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // scenario
  auto* sc = app.add_subcommand("scenario", "run a named figure preset");
  std::string sc_name, sc_out = ".", sc_format = "csv";
  sc->add_option("name", sc_name, "preset name (see --list)")->required(false);
  auto* sc_out_opt = sc->add_option("--out", sc_out, "output directory");
  auto* sc_fmt_opt =
      sc->add_option("--format", sc_format)->check(CLI::IsMember({"csv", "json"}));
  bool sc_list = false;
  sc->add_flag("--list", sc_list, "list presets and exit");
  apply_default(cfg, "out", sc_out_opt);
  apply_default(cfg, "format", sc_fmt_opt);

  // grid
  auto* gr = app.add_subcommand("grid", "evaluate channels on an ad-hoc grid");
  double gr_dx = 1.0, gr_k0 = 0.0, gr_mass = 0.0, gr_tol = 1e-10;
  std::string gr_x = "-12:12:0.1", gr_t = "0:0:1";
  std::string gr_channels = "born,canonical_h_norm,pseudo_h_norm,charge_norm";
  std::string gr_method = "auto", gr_format = "csv", gr_out;
  apply_default(cfg, "dx", gr->add_option("--dx", gr_dx, "packet width"));
  apply_default(cfg, "k0", gr->add_option("--k0", gr_k0, "center wavenumber"));
  apply_default(cfg, "mass", gr->add_option("--mass", gr_mass, "mass"));
  gr->add_option("--x", gr_x, "x axis min:max:step");
  gr->add_option("--t", gr_t, "t axis min:max:step");
  gr->add_option("--channels", gr_channels, "comma-separated channel names");
  apply_default(cfg, "method",
                gr->add_option("--method", gr_method)
                    ->check(CLI::IsMember({"auto", "closed", "quad"})));
  apply_default(cfg, "tol", gr->add_option("--tol", gr_tol, "quadrature tolerance"));
  apply_default(cfg, "format",
                gr->add_option("--format", gr_format)
                    ->check(CLI::IsMember({"csv", "json"})));
  gr->add_option("--out", gr_out, "output file (default: stdout)");

  // check
  auto* ck = app.add_subcommand("check", "run the invariant suite");
  std::string ck_suite = "fast", ck_profile = "default", ck_out;
  apply_default(cfg, "suite",
                ck->add_option("--suite", ck_suite)
                    ->check(CLI::IsMember({"fast", "full"})));
  apply_default(cfg, "tol-profile",
                ck->add_option("--tol-profile", ck_profile)
                    ->check(CLI::IsMember({"default", "strict"})));
  ck->add_option("--out", ck_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (sc->parsed()) {
    if (sc_list) {
      for (const Preset& p : preset_registry()) {
        std::string figs;
        for (int f : p.figures) figs += (figs.empty() ? "" : ",") + std::to_string(f);
        std::printf("%-20s fig %-11s %s\n", p.name.c_str(), figs.c_str(),
                    p.description.c_str());
      }
      return 0;
    }
    if (sc_name.empty()) throw usage_error("scenario: missing preset name");
    const ScenarioResult res = run_scenario(sc_name, sc_out, sc_format);
    for (const std::string& f : res.written_files)
      std::printf("wrote %s\n", f.c_str());
    for (const CheckRecord& c : res.report.checks)
      std::printf("[%s] %s: measured=%.6g\n", c.pass ? "ok" : "FAIL",
                  c.name.c_str(), c.measured);
    return res.report.all_pass() ? 0 : 4;
  }

  if (gr->parsed()) {
    PacketSpec spec;
    spec.delta_x = gr_dx;
    spec.k0 = gr_k0;
    spec.mass = gr_mass;
    spec.validate();
    const DensityGrid grid =
        evaluate_grid(spec, split_channels(gr_channels), parse_axis(gr_x, "x"),
                      parse_axis(gr_t, "t"), parse_method(gr_method), gr_tol);
    const std::string payload =
        gr_format == "csv" ? grid_to_csv(grid) : grid_to_json(grid);
    if (gr_out.empty())
      std::fwrite(payload.data(), 1, payload.size(), stdout);
    else
      write_file(gr_out, payload);
    return 0;
  }

  // check
  const AnalysisReport report = run_checks(ck_suite, ck_profile);
  for (const CheckRecord& c : report.checks)
    std::printf("[%s] %s: measured=%.9g expected=%.9g tol=%.3g%s%s\n",
                c.pass ? "ok" : "FAIL", c.name.c_str(), c.measured, c.expected,
                c.tol, c.note.empty() ? "" : "  # ", c.note.c_str());
  if (!ck_out.empty()) write_file(ck_out, report_to_json(report));
  std::printf("%s\n", report.all_pass() ? "all checks passed" : "CHECK FAILURES");
  return report.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const usage_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const capability_error& e) {
    std::fprintf(stderr, "capability error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  }
}
