#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "semloc/floorplan.hpp"

namespace semloc {

/// Exact Euclidean distance (metres, between cell centres) from every cell to
/// the nearest source cell; +inf everywhere when the plan has no source cells.
struct DistanceMap {
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  std::vector<double> values;
  bool has_sources = false;

  double at(GridIndex idx) const { return values[static_cast<size_t>(idx.row) * width + idx.col]; }
  double at(int col, int row) const { return values[static_cast<size_t>(row) * width + col]; }

  /// Bilinear interpolation at continuous grid coordinates (cell units, centre
  /// of cell (c,r) at (c+0.5, r+0.5)); clamped to the centre lattice at the
  /// borders. Returns +inf if any participating cell is +inf.
  double sample(Vec2 grid_pos) const;
};

/// Source = the given label (cells with label likelihood >= tau_o), or the
/// occupancy predicate (occupancy >= tau_o) when `source` is empty.
DistanceMap build_distance_map(const SemanticFloorplan& plan, std::optional<Label> source);

/// sigma_base / prior. Returns +inf when prior = 0 (label absent from the map);
/// callers must then score the label as a neutral constant.
double sigma_for_label(double prior, double sigma_base);

/// Gaussian decay exp(-d^2 / (2 sigma^2)); 1 at d = 0.
double field_likelihood(double distance, double sigma);

/// Distance maps plus the per-label sigma schedule derived from label priors.
struct LikelihoodFieldSet {
  DistanceMap occ;
  std::array<DistanceMap, kLabelCount> per_label;
  double sigma_occ = 0.2;
  std::array<double, kLabelCount> sigma{};   // +inf for labels absent from the map
  std::array<double, kLabelCount> prior{};

  const DistanceMap& field(Label l) const { return per_label[static_cast<int>(l)]; }
  double label_sigma(Label l) const { return sigma[static_cast<int>(l)]; }
  double label_prior(Label l) const { return prior[static_cast<int>(l)]; }
  bool label_informative(Label l) const { return std::isfinite(label_sigma(l)); }
};

LikelihoodFieldSet build_likelihood_fields(const SemanticFloorplan& plan, double sigma_occ,
                                           double sigma_base);

/// Debug visualisation: 16-bit grey PNG, pixel = min(distance / resolution, 65535).
void write_distance_map_png(const DistanceMap& map, const std::string& path);

}  // namespace semloc
