#include "semloc/distance_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semloc/image_io.hpp"

namespace semloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1D squared-distance transform (lower envelope of parabolas). f holds squared
// distances (or +inf); d receives min_q (x-q)^2 + f[q]. Exact for integer f.
void dt_1d(const std::vector<double>& f, std::vector<double>& d, int n, std::vector<int>& v,
           std::vector<double>& z) {
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  // Skip leading +inf parabolas so intersections stay finite.
  int first = 0;
  while (first < n && f[first] == kInf) ++first;
  if (first == n) {
    std::fill_n(d.begin(), n, kInf);
    return;
  }
  v[0] = first;
  for (int q = first + 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s = ((f[q] + static_cast<double>(q) * q) -
                (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
               (2.0 * q - 2.0 * v[k]);
    while (s <= z[k]) {
      --k;
      s = ((f[q] + static_cast<double>(q) * q) -
           (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
          (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int x = 0; x < n; ++x) {
    while (z[k + 1] < x) ++k;
    const double dx = x - v[k];
    d[x] = dx * dx + f[v[k]];
  }
}

}  // namespace

double DistanceMap::sample(Vec2 grid_pos) const {
  // Interpolate on the cell-centre lattice; clamp so border cells extend outward.
  const double fx = std::clamp(grid_pos.x - 0.5, 0.0, static_cast<double>(width - 1));
  const double fy = std::clamp(grid_pos.y - 0.5, 0.0, static_cast<double>(height - 1));
  const int c0 = std::min(static_cast<int>(fx), width - 2 >= 0 ? width - 2 : 0);
  const int r0 = std::min(static_cast<int>(fy), height - 2 >= 0 ? height - 2 : 0);
  const int c1 = std::min(c0 + 1, width - 1);
  const int r1 = std::min(r0 + 1, height - 1);
  const double tx = fx - c0;
  const double ty = fy - r0;
  const double v00 = at(c0, r0), v10 = at(c1, r0), v01 = at(c0, r1), v11 = at(c1, r1);
  if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) || !std::isfinite(v11))
    return kInf;
  const double top = v00 + tx * (v10 - v00);
  const double bot = v01 + tx * (v11 - v01);
  return top + ty * (bot - top);
}

DistanceMap build_distance_map(const SemanticFloorplan& plan, std::optional<Label> source) {
  const int w = plan.width(), h = plan.height();
  const double tau = plan.occupied_threshold();

  DistanceMap map;
  map.width = w;
  map.height = h;
  map.resolution = plan.resolution();
  map.values.assign(static_cast<size_t>(w) * h, kInf);

  // Squared distances in cell units stay exact integers throughout both passes.
  std::vector<double> g(static_cast<size_t>(w) * h, kInf);
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      const Cell& c = plan.at({col, row});
      const bool is_source = source ? (c.label(*source) >= tau) : (c.occupancy >= tau);
      if (is_source) {
        g[static_cast<size_t>(row) * w + col] = 0.0;
        map.has_sources = true;
      }
    }
  }
  if (!map.has_sources) return map;

  const int n_max = std::max(w, h);
  std::vector<double> f(n_max), d(n_max), z(n_max + 1);
  std::vector<int> v(n_max);

  // Columns first, then rows.
  for (int col = 0; col < w; ++col) {
    for (int row = 0; row < h; ++row) f[row] = g[static_cast<size_t>(row) * w + col];
    dt_1d(f, d, h, v, z);
    for (int row = 0; row < h; ++row) g[static_cast<size_t>(row) * w + col] = d[row];
  }
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) f[col] = g[static_cast<size_t>(row) * w + col];
    dt_1d(f, d, w, v, z);
    for (int col = 0; col < w; ++col)
      map.values[static_cast<size_t>(row) * w + col] = plan.resolution() * std::sqrt(d[col]);
  }
  return map;
}

double sigma_for_label(double prior, double sigma_base) {
  if (prior < 0.0 || prior > 1.0) throw std::invalid_argument("prior must be in [0,1]");
  if (sigma_base <= 0.0) throw std::invalid_argument("sigma_base must be > 0");
  if (prior == 0.0) return kInf;
  return sigma_base / prior;
}

double field_likelihood(double distance, double sigma) {
  if (distance < 0.0) throw std::invalid_argument("distance must be >= 0");
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be > 0");
  return std::exp(-(distance * distance) / (2.0 * sigma * sigma));
}

LikelihoodFieldSet build_likelihood_fields(const SemanticFloorplan& plan, double sigma_occ,
                                           double sigma_base) {
  if (sigma_occ <= 0.0) throw std::invalid_argument("sigma_occ must be > 0");
  LikelihoodFieldSet fields;
  fields.sigma_occ = sigma_occ;
  fields.occ = build_distance_map(plan, std::nullopt);
  for (Label l : kAllLabels) {
    const int i = static_cast<int>(l);
    fields.per_label[i] = build_distance_map(plan, l);
    fields.prior[i] = plan.label_prior(l);
    fields.sigma[i] = sigma_for_label(fields.prior[i], sigma_base);
  }
  return fields;
}

void write_distance_map_png(const DistanceMap& map, const std::string& path) {
  std::vector<uint16_t> pixels(map.values.size());
  for (size_t i = 0; i < map.values.size(); ++i) {
    const double cells = map.values[i] / map.resolution;
    pixels[i] = static_cast<uint16_t>(std::min(cells, 65535.0));
  }
  write_png_gray16(path, map.width, map.height, pixels);
}

}  // namespace semloc
