#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semloc/image_io.hpp"
#include "semloc/pose.hpp"

namespace semloc {

/// Semantic classes carried by structure cells.
enum class Label : int { Wall = 0, Door = 1, Window = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {Label::Wall, Label::Door, Label::Window};
inline constexpr int kLabelCount = 3;

/// Raster code <-> label. Code 0 means "no label".
int label_code(Label l);
std::optional<Label> label_from_code(int code);  // throws on codes outside {0..3}
const char* label_name(Label l);

struct Cell {
  double occupancy = 0.0;                       // [0, 1]
  std::array<double, kLabelCount> label_likelihood{};  // [0, 1] each

  double label(Label l) const { return label_likelihood[static_cast<int>(l)]; }
  void set_label(Label l, double v) { label_likelihood[static_cast<int>(l)] = v; }
};

struct GridIndex {
  int col = 0;
  int row = 0;

  bool operator==(const GridIndex&) const = default;
};

struct MapMeta {
  double resolution = 0.05;  // metres per cell
  Pose2D origin;             // world pose of the corner of cell (0,0)
  double occupied_thresh = 0.65;
};

MapMeta read_map_meta(const std::string& path);
void write_map_meta(const std::string& path, const MapMeta& meta);

/// Occupancy grid whose cells carry per-label likelihoods alongside occupancy.
/// Immutable after construction/loading; safe to share across threads read-only.
class SemanticFloorplan {
 public:
  SemanticFloorplan(int width, int height, MapMeta meta);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return meta_.resolution; }
  const Pose2D& origin() const { return meta_.origin; }
  double occupied_threshold() const { return meta_.occupied_thresh; }
  const MapMeta& meta() const { return meta_; }

  bool in_bounds(GridIndex idx) const {
    return idx.col >= 0 && idx.row >= 0 && idx.col < width_ && idx.row < height_;
  }
  const Cell& at(GridIndex idx) const { return cells_[static_cast<size_t>(idx.row) * width_ + idx.col]; }
  Cell& at(GridIndex idx) { return cells_[static_cast<size_t>(idx.row) * width_ + idx.col]; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool occupied(GridIndex idx) const { return at(idx).occupancy >= meta_.occupied_thresh; }

  /// World point -> containing cell; nullopt when outside the grid.
  std::optional<GridIndex> world_to_grid(Vec2 p) const;

  /// World point -> continuous grid coordinates in cell units ((c+0.5, r+0.5)
  /// is the centre of cell (c, r)); nullopt when outside the grid.
  std::optional<Vec2> world_to_grid_continuous(Vec2 p) const;

  /// Centre of a cell in world coordinates. Throws std::out_of_range on bad index.
  Vec2 grid_to_world(GridIndex idx) const;

  /// Fraction of occupied cells (occupancy >= tau_o) carrying the label at >= tau_o.
  /// Throws std::runtime_error when the plan has no occupied cells.
  double label_prior(Label l) const;

  /// Argmax label of a cell, or nullopt when every label likelihood is below tau_o.
  std::optional<Label> dominant_label(GridIndex idx) const;

  size_t occupied_cell_count() const;
  size_t free_cell_count() const { return cells_.size() - occupied_cell_count(); }

 private:
  int width_;
  int height_;
  MapMeta meta_;
  std::vector<Cell> cells_;
};

/// Builds a plan from an 8-bit greyscale occupancy raster (dark = occupied,
/// occupancy = 1 - grey/255) and an 8-bit label raster with codes
/// {0 = none, 1 = wall, 2 = door, 3 = window}.
SemanticFloorplan load_floorplan(const ImageU8& occupancy_raster, const ImageU8& label_raster,
                                 const MapMeta& meta);
SemanticFloorplan load_floorplan(const std::string& occupancy_path, const std::string& label_path,
                                 const std::string& meta_path);

/// Inverse of load_floorplan for generated plans: grey = round(255*(1-occupancy)),
/// label code = argmax label with likelihood >= tau_o (0 when none).
void save_floorplan(const SemanticFloorplan& plan, const std::string& occupancy_path,
                    const std::string& label_path, const std::string& meta_path);

}  // namespace semloc
