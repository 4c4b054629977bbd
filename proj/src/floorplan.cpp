#include "semloc/floorplan.hpp"

#include <cmath>
#include <stdexcept>

#include "semloc/kv_config.hpp"

namespace semloc {

int label_code(Label l) { return static_cast<int>(l) + 1; }

std::optional<Label> label_from_code(int code) {
  switch (code) {
    case 0: return std::nullopt;
    case 1: return Label::Wall;
    case 2: return Label::Door;
    case 3: return Label::Window;
    default: throw std::runtime_error("unknown label code " + std::to_string(code));
  }
}

const char* label_name(Label l) {
  switch (l) {
    case Label::Wall: return "wall";
    case Label::Door: return "door";
    case Label::Window: return "window";
  }
  return "?";
}

MapMeta read_map_meta(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::load(path);
  MapMeta meta;
  meta.resolution = kv.get_double("resolution");
  meta.origin.x = kv.get_double("origin_x", 0.0);
  meta.origin.y = kv.get_double("origin_y", 0.0);
  meta.origin.theta = kv.get_double("origin_theta", 0.0);
  meta.occupied_thresh = kv.get_double("occupied_thresh", 0.65);
  if (meta.resolution <= 0.0) throw std::runtime_error(path + ": resolution must be > 0");
  if (meta.occupied_thresh <= 0.0 || meta.occupied_thresh >= 1.0)
    throw std::runtime_error(path + ": occupied_thresh must be in (0,1)");
  return meta;
}

void write_map_meta(const std::string& path, const MapMeta& meta) {
  KeyValueFile kv;
  kv.set("resolution", meta.resolution);
  kv.set("origin_x", meta.origin.x);
  kv.set("origin_y", meta.origin.y);
  kv.set("origin_theta", meta.origin.theta);
  kv.set("occupied_thresh", meta.occupied_thresh);
  kv.save(path);
}

SemanticFloorplan::SemanticFloorplan(int width, int height, MapMeta meta)
    : width_(width), height_(height), meta_(meta) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("plan dimensions must be positive");
  if (meta.resolution <= 0.0) throw std::invalid_argument("resolution must be > 0");
  if (meta.occupied_thresh <= 0.0 || meta.occupied_thresh >= 1.0)
    throw std::invalid_argument("occupied_thresh must be in (0,1)");
  cells_.resize(static_cast<size_t>(width) * height);
}

std::optional<GridIndex> SemanticFloorplan::world_to_grid(Vec2 p) const {
  const auto g = world_to_grid_continuous(p);
  if (!g) return std::nullopt;
  return GridIndex{static_cast<int>(std::floor(g->x)), static_cast<int>(std::floor(g->y))};
}

std::optional<Vec2> SemanticFloorplan::world_to_grid_continuous(Vec2 p) const {
  const Vec2 local = rotate(-meta_.origin.theta, p - meta_.origin.position());
  const Vec2 g{local.x / meta_.resolution, local.y / meta_.resolution};
  if (g.x < 0.0 || g.y < 0.0 || g.x >= width_ || g.y >= height_) return std::nullopt;
  return g;
}

Vec2 SemanticFloorplan::grid_to_world(GridIndex idx) const {
  if (!in_bounds(idx)) throw std::out_of_range("grid index out of bounds");
  const Vec2 local{(idx.col + 0.5) * meta_.resolution, (idx.row + 0.5) * meta_.resolution};
  return meta_.origin.position() + rotate(meta_.origin.theta, local);
}

size_t SemanticFloorplan::occupied_cell_count() const {
  size_t n = 0;
  for (const auto& c : cells_)
    if (c.occupancy >= meta_.occupied_thresh) ++n;
  return n;
}

double SemanticFloorplan::label_prior(Label l) const {
  size_t occupied = 0, labelled = 0;
  for (const auto& c : cells_) {
    if (c.occupancy < meta_.occupied_thresh) continue;
    ++occupied;
    if (c.label(l) >= meta_.occupied_thresh) ++labelled;
  }
  if (occupied == 0) throw std::runtime_error("label_prior: plan has no occupied cells");
  return static_cast<double>(labelled) / static_cast<double>(occupied);
}

std::optional<Label> SemanticFloorplan::dominant_label(GridIndex idx) const {
  const Cell& c = at(idx);
  Label best = Label::Wall;
  double best_v = -1.0;
  for (Label l : kAllLabels) {
    if (c.label(l) > best_v) {
      best_v = c.label(l);
      best = l;
    }
  }
  if (best_v < meta_.occupied_thresh) return std::nullopt;
  return best;
}

SemanticFloorplan load_floorplan(const ImageU8& occupancy_raster, const ImageU8& label_raster,
                                 const MapMeta& meta) {
  if (occupancy_raster.width != label_raster.width ||
      occupancy_raster.height != label_raster.height)
    throw std::runtime_error("occupancy and label rasters have different dimensions");

  SemanticFloorplan plan(occupancy_raster.width, occupancy_raster.height, meta);
  for (int row = 0; row < plan.height(); ++row) {
    for (int col = 0; col < plan.width(); ++col) {
      Cell& cell = plan.at({col, row});
      cell.occupancy = 1.0 - occupancy_raster.at(col, row) / 255.0;
      const auto label = label_from_code(label_raster.at(col, row));
      if (label) {
        if (cell.occupancy <= 0.0)
          throw std::runtime_error("label on unoccupied cell at (" + std::to_string(col) + "," +
                                   std::to_string(row) + ")");
        cell.set_label(*label, 1.0);
      }
    }
  }
  return plan;
}

SemanticFloorplan load_floorplan(const std::string& occupancy_path, const std::string& label_path,
                                 const std::string& meta_path) {
  return load_floorplan(read_image_gray(occupancy_path), read_image_gray(label_path),
                        read_map_meta(meta_path));
}

void save_floorplan(const SemanticFloorplan& plan, const std::string& occupancy_path,
                    const std::string& label_path, const std::string& meta_path) {
  ImageU8 occ = make_image_u8(plan.width(), plan.height());
  ImageU8 lbl = make_image_u8(plan.width(), plan.height());
  for (int row = 0; row < plan.height(); ++row) {
    for (int col = 0; col < plan.width(); ++col) {
      const Cell& cell = plan.at({col, row});
      occ.at(col, row) = static_cast<uint8_t>(std::lround(255.0 * (1.0 - cell.occupancy)));
      const auto label = plan.dominant_label({col, row});
      lbl.at(col, row) = label ? static_cast<uint8_t>(label_code(*label)) : 0;
    }
  }
  write_pgm(occupancy_path, occ);
  write_pgm(label_path, lbl);
  write_map_meta(meta_path, plan.meta());
}

}  // namespace semloc
