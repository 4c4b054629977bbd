#pragma once

#include <optional>

#include "semloc/floorplan.hpp"
#include "semloc/pose.hpp"

namespace semloc {

struct RaycastHit {
  double range = 0.0;            // metres from pose to the hit cell's entry boundary
  GridIndex cell;                // first cell with occupancy >= tau_o
  std::optional<Label> label;    // dominant label of the hit cell
};

/// Walks the grid from `pose` along direction `pose.theta + bearing`, visiting
/// every crossed cell in order, and returns the first occupied cell. The cell
/// containing the pose itself is skipped so the returned range is always > 0.
/// Returns nullopt when the ray leaves the map or exceeds max_range.
/// Throws std::domain_error when the pose lies outside the map.
std::optional<RaycastHit> raycast(const SemanticFloorplan& plan, const Pose2D& pose,
                                  double bearing, double max_range);

}  // namespace semloc
