#include "qproxy/io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace qproxy {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::ordered_json meta_json(const DensityGrid& grid) {
  nlohmann::ordered_json meta;
  meta["version"] = kVersion;
  for (const auto& [k, v] : serialize_spec(grid.meta.spec)) meta["spec"][k] = v;
  meta["method"] = grid.meta.method;
  meta["tol"] = grid.meta.tol;
  for (const auto& [k, v] : grid.meta.extra) meta[k] = v;
  return meta;
}

}  // namespace

std::string grid_to_csv(const DensityGrid& grid) {
  std::string out;
  out += "# version=" + std::string(kVersion) + "\n";
  for (const auto& [k, v] : serialize_spec(grid.meta.spec))
    out += "# " + k + "=" + v + "\n";
  out += "# method=" + grid.meta.method + "\n";
  out += "# tol=" + fmt17(grid.meta.tol) + "\n";
  for (const auto& [k, v] : grid.meta.extra) out += "# " + k + "=" + v + "\n";

  out += "x,t";
  for (const auto& [name, data] : grid.channels) {
    (void)data;
    out += "," + name;
  }
  out += "\n";
  for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
      out += fmt17(grid.x_axis[ix]);
      out += ",";
      out += fmt17(grid.t_axis[it]);
      for (const auto& [name, data] : grid.channels) {
        (void)name;
        out += ",";
        out += fmt17(data[grid.index(it, ix)]);
      }
      out += "\n";
    }
  }
  return out;
}

std::string grid_to_json(const DensityGrid& grid) {
  nlohmann::ordered_json j;
  j["meta"] = meta_json(grid);
  j["axes"]["x"] = grid.x_axis;
  j["axes"]["t"] = grid.t_axis;
  for (const auto& [name, data] : grid.channels) j["channels"][name] = data;
  return j.dump(2) + "\n";
}

std::string report_to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  for (const auto& [k, v] : report.provenance) j["spec"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["measured"] = c.measured;
    jc["expected"] = c.expected;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << contents;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace qproxy
