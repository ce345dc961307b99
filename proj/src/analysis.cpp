#include "qproxy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qproxy {
namespace {

const std::vector<double>& channel_data(const DensityGrid& grid,
                                        const std::string& channel) {
  auto it = grid.channels.find(channel);
  if (it == grid.channels.end())
    throw usage_error("analysis: channel '" + channel + "' not in grid");
  return it->second;
}

double grid_dx(const DensityGrid& grid) {
  if (grid.x_axis.size() < 2) throw usage_error("analysis: need >= 2 x samples");
  return grid.x_axis[1] - grid.x_axis[0];
}

// Composite Simpson over a uniform slice; even sample counts get a trapezoid
// patch on the last interval.
double simpson(const double* f, std::size_t n, double h) {
  if (n < 3) throw usage_error("analysis: need >= 3 x samples to integrate");
  std::size_t m = (n % 2 == 1) ? n : n - 1;
  double s = f[0] + f[m - 1];
  for (std::size_t i = 1; i < m - 1; ++i) s += f[i] * (i % 2 == 1 ? 4.0 : 2.0);
  s *= h / 3.0;
  if (n % 2 == 0) s += 0.5 * h * (f[n - 2] + f[n - 1]);
  return s;
}

struct Slice {
  const double* data;
  std::size_t n;
  double h;
};

Slice slice_at(const DensityGrid& grid, const std::string& channel,
               std::size_t t_index) {
  if (t_index >= grid.t_axis.size()) throw usage_error("analysis: bad t_index");
  const std::vector<double>& d = channel_data(grid, channel);
  return {d.data() + t_index * grid.x_axis.size(), grid.x_axis.size(),
          grid_dx(grid)};
}

void check_boundary(const Slice& s, double guard, const std::string& channel) {
  double peak = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) peak = std::max(peak, std::abs(s.data[i]));
  const double edge = std::max(std::abs(s.data[0]), std::abs(s.data[s.n - 1]));
  if (peak > 0.0 && edge > guard * peak)
    throw boundary_leak_error("integrate_channel: truncated tails in '" +
                              channel + "'");
}

}  // namespace

double integrate_channel(const DensityGrid& grid, const std::string& channel,
                         std::size_t t_index, double guard) {
  const Slice s = slice_at(grid, channel, t_index);
  check_boundary(s, guard, channel);
  return simpson(s.data, s.n, s.h);
}

std::vector<NegativeInterval> negative_regions(const DensityGrid& grid,
                                               const std::string& channel,
                                               std::size_t t_index,
                                               double floor_fraction) {
  if (!(floor_fraction > 0.0))
    throw usage_error("negative_regions: floor_fraction must be > 0");
  const Slice s = slice_at(grid, channel, t_index);
  double peak = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) peak = std::max(peak, std::abs(s.data[i]));
  const double floor = -floor_fraction * peak;
  const double ct = std::abs(grid.t_axis[t_index]);
  const double guard_band = 0.5 * s.h;

  std::vector<NegativeInterval> out;
  std::size_t i = 0;
  while (i < s.n) {
    if (s.data[i] < floor) {
      std::size_t j = i;
      NegativeInterval iv;
      iv.min_value = s.data[i];
      while (j + 1 < s.n && s.data[j + 1] < floor) {
        ++j;
        iv.min_value = std::min(iv.min_value, s.data[j]);
      }
      iv.x_lo = grid.x_axis[i];
      iv.x_hi = grid.x_axis[j];
      double abs_min = std::abs(iv.x_lo), abs_max = std::abs(iv.x_lo);
      for (std::size_t k = i; k <= j; ++k) {
        abs_min = std::min(abs_min, std::abs(grid.x_axis[k]));
        abs_max = std::max(abs_max, std::abs(grid.x_axis[k]));
      }
      if (abs_min > ct + guard_band)
        iv.side = ConeSide::outside;
      else if (abs_max < ct - guard_band)
        iv.side = ConeSide::inside;
      else
        iv.side = ConeSide::straddling;
      out.push_back(iv);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

ConeOffsets cone_offset(const DensityGrid& grid, const std::string& channel,
                        std::size_t t_index) {
  const Slice s = slice_at(grid, channel, t_index);
  const double ct = std::abs(grid.t_axis[t_index]);
  ConeOffsets res;
  if (ct <= 2.0 * grid.meta.spec.delta_x) return res;  // lobes not separated

  auto refine = [&](std::size_t lo, std::size_t hi, bool& ok) -> double {
    // argmax over [lo, hi] with 3-point parabolic refinement
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i)
      if (s.data[i] > s.data[best]) best = i;
    if (best == lo || best == hi) {
      ok = false;
      return 0.0;
    }
    const double y0 = s.data[best - 1], y1 = s.data[best], y2 = s.data[best + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    const double shift = (denom != 0.0) ? 0.5 * (y0 - y2) / denom : 0.0;
    ok = true;
    return grid.x_axis[best] + shift * s.h;
  };

  // Peak of the positive-x lobe; fail if the maximum sits at the split point
  // (unimodal profile) or the window edge.
  std::size_t mid = 0;
  while (mid < s.n && grid.x_axis[mid] < 0.0) ++mid;
  if (mid + 2 >= s.n || mid < 2) return res;
  bool ok_r = false, ok_l = false;
  const double xr = refine(mid + 1, s.n - 1, ok_r);
  const double xl = refine(0, mid - 1, ok_l);
  if (!ok_r || !ok_l) return res;
  res.applicable = true;
  res.right = ct - xr;
  res.left = ct - std::abs(xl);
  return res;
}

double proxy_divergence(const DensityGrid& grid, std::size_t t_index) {
  const char* names[4] = {channel::born, channel::canonical_h_norm,
                          channel::pseudo_h_norm, channel::charge_norm};
  Slice s[4] = {slice_at(grid, names[0], t_index), slice_at(grid, names[1], t_index),
                slice_at(grid, names[2], t_index), slice_at(grid, names[3], t_index)};
  double peak = 0.0;
  for (const Slice& sl : s)
    for (std::size_t i = 0; i < sl.n; ++i) peak = std::max(peak, sl.data[i]);
  if (peak <= 0.0) return 0.0;
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (std::size_t i = 0; i < s[a].n; ++i)
        worst = std::max(worst, std::abs(s[a].data[i] - s[b].data[i]));
  return worst / peak;
}

double centroid_velocity(const DensityGrid& grid, const std::string& channel,
                         std::size_t t_index_a, std::size_t t_index_b,
                         double guard) {
  if (t_index_a == t_index_b)
    throw usage_error("centroid_velocity: need two distinct time slices");
  auto centroid = [&](std::size_t it) {
    const Slice s = slice_at(grid, channel, it);
    check_boundary(s, guard, channel);
    std::vector<double> xf(s.n);
    for (std::size_t i = 0; i < s.n; ++i) xf[i] = grid.x_axis[i] * s.data[i];
    const double m0 = simpson(s.data, s.n, s.h);
    const double m1 = simpson(xf.data(), s.n, s.h);
    return m1 / m0;
  };
  const double dt = grid.t_axis[t_index_b] - grid.t_axis[t_index_a];
  return (centroid(t_index_b) - centroid(t_index_a)) / dt;
}

std::vector<double> variance_growth(const DensityGrid& grid,
                                    const std::string& channel,
                                    const std::vector<std::size_t>& t_indices,
                                    double guard) {
  std::vector<double> out;
  out.reserve(t_indices.size());
  for (std::size_t it : t_indices) {
    const Slice s = slice_at(grid, channel, it);
    check_boundary(s, guard, channel);
    std::vector<double> xf(s.n), x2f(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
      xf[i] = grid.x_axis[i] * s.data[i];
      x2f[i] = grid.x_axis[i] * grid.x_axis[i] * s.data[i];
    }
    const double m0 = simpson(s.data, s.n, s.h);
    const double m1 = simpson(xf.data(), s.n, s.h) / m0;
    const double m2 = simpson(x2f.data(), s.n, s.h) / m0;
    out.push_back(m2 - m1 * m1);
  }
  return out;
}

std::vector<double> line_integral_extrapolated(
    const std::function<std::vector<double>(double)>& f, std::size_t ncomp,
    const std::vector<LineSegment>& schedule, bool parallel) {
  if (schedule.empty()) throw usage_error("line_integral: empty schedule");

  // Build all nodes with Simpson weights, remembering which window each
  // segment belongs to.
  std::vector<double> nodes, weights;
  std::vector<std::size_t> window_of;  // per node
  double prev = 0.0;
  for (std::size_t seg = 0; seg < schedule.size(); ++seg) {
    const double end = schedule[seg].x_end;
    const double step = schedule[seg].step;
    if (!(end > prev) || !(step > 0.0))
      throw usage_error("line_integral: bad schedule");
    std::size_t n = static_cast<std::size_t>(std::ceil((end - prev) / step));
    if (n % 2 == 1) ++n;
    if (n < 2) n = 2;
    const double h = (end - prev) / static_cast<double>(n);
    for (int sign = -1; sign <= 1; sign += 2) {
      for (std::size_t i = 0; i <= n; ++i) {
        const double x = sign * (prev + static_cast<double>(i) * h);
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        nodes.push_back(x);
        weights.push_back(w * h / 3.0);
        window_of.push_back(seg);
      }
    }
    prev = end;
  }

  std::vector<std::vector<double>> fvals(nodes.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nodes.size()); ++i)
      fvals[static_cast<std::size_t>(i)] = f(nodes[static_cast<std::size_t>(i)]);
  } else {
    for (std::size_t i = 0; i < nodes.size(); ++i) fvals[i] = f(nodes[i]);
  }

  // Per-window partial integrals, then cumulative I(X_j).
  const std::size_t nwin = schedule.size();
  std::vector<std::vector<double>> partial(nwin, std::vector<double>(ncomp, 0.0));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (fvals[i].size() != ncomp)
      throw usage_error("line_integral: f returned wrong component count");
    for (std::size_t c = 0; c < ncomp; ++c)
      partial[window_of[i]][c] += weights[i] * fvals[i][c];
  }
  std::vector<std::vector<double>> cum(nwin, std::vector<double>(ncomp, 0.0));
  for (std::size_t w = 0; w < nwin; ++w)
    for (std::size_t c = 0; c < ncomp; ++c)
      cum[w][c] = (w == 0 ? 0.0 : cum[w - 1][c]) + partial[w][c];
  if (nwin == 1) return cum[0];

  // Lagrange interpolation of I(1/X) at 1/X = 0.
  std::vector<double> u(nwin);
  for (std::size_t w = 0; w < nwin; ++w) u[w] = 1.0 / schedule[w].x_end;
  std::vector<double> out(ncomp, 0.0);
  for (std::size_t j = 0; j < nwin; ++j) {
    double lj = 1.0;
    for (std::size_t m = 0; m < nwin; ++m)
      if (m != j) lj *= (0.0 - u[m]) / (u[j] - u[m]);
    for (std::size_t c = 0; c < ncomp; ++c) out[c] += lj * cum[j][c];
  }
  return out;
}

}  // namespace qproxy
