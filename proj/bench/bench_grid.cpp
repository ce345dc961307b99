// Times evaluate_grid with the OpenMP policy against the serial reference and
// verifies that the two produce identical numbers.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "qproxy/grid.hpp"

using namespace qproxy;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_case(const char* label, const PacketSpec& spec,
                const std::vector<double>& xs, const std::vector<double>& ts,
                const std::vector<std::string>& chans) {
  const auto t0 = clock_type::now();
  const DensityGrid par =
      evaluate_grid(spec, chans, xs, ts, Method::automatic, 1e-10, GridPolicy::openmp);
  const double t_par = seconds_since(t0);

  const auto t1 = clock_type::now();
  const DensityGrid ser =
      evaluate_grid(spec, chans, xs, ts, Method::automatic, 1e-10, GridPolicy::serial);
  const double t_ser = seconds_since(t1);

  double max_diff = 0.0;
  for (const auto& [name, a] : par.channels) {
    const auto& b = ser.channels.at(name);
    for (std::size_t i = 0; i < a.size(); ++i)
      max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
  }
  std::printf("%-28s %7zu pts  openmp %8.3f s  serial %8.3f s  speedup %5.2fx  max|diff| %g\n",
              label, xs.size() * ts.size(), t_par, t_ser,
              t_ser / std::max(t_par, 1e-9), max_diff);
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<std::string> proxies = {
      channel::born, channel::canonical_h_norm, channel::pseudo_h_norm,
      channel::charge_norm};

  PacketSpec closed;  // m = 0, k0 = 0: closed-form kernels
  bench_case("closed-form proxies", closed, linspace_step(-12.0, 12.0, 0.02),
             linspace_step(-8.0, 8.0, 0.5), proxies);

  PacketSpec boosted;
  boosted.k0 = 10.0;
  bench_case("quadrature phi (k0=10)", boosted,
             linspace_step(-12.0, 12.0, 0.1), {0.0, 5.0}, proxies);

  PacketSpec massive;
  massive.mass = 0.2;
  bench_case("quadrature psi+phi (m=0.2)", massive,
             linspace_step(-12.0, 12.0, 0.2), {0.0, 2.0}, proxies);
  return 0;
}
