#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semloc/floorplan.hpp"

namespace semloc {

/// One bearing-label reading, optionally carrying a range.
/// Bearing is in the sensor frame: 0 = forward, positive = left.
struct SedarReading {
  double bearing = 0.0;                 // [-pi, pi)
  std::optional<double> range;          // metres, (0, max_range] when present
  std::optional<Label> label;           // nullopt = unlabeled structure / segmentation miss
};

/// Readings along one horizontal scanline, strictly increasing in bearing.
struct SedarScan {
  double timestamp = 0.0;
  std::vector<SedarReading> readings;
};

/// Copy of the scan with every range removed (bearing-label tuples only).
SedarScan strip_ranges(const SedarScan& scan);

/// True when every reading carries a range.
bool scan_has_ranges(const SedarScan& scan);

/// Bearings of the columns of a pinhole camera scanline:
/// theta_k = atan(tan(fov/2) * (2k/(K-1) - 1)). Strictly increasing,
/// antisymmetric about 0.
std::vector<double> bearings_for_camera(double horizontal_fov, int count);

/// Equiangular spacing over [-fov/2, fov/2] (LiDAR-style emulation).
std::vector<double> bearings_equiangular(double horizontal_fov, int count);

/// Scan log: one line per scan, `t theta_0 r_0 l_0 theta_1 r_1 l_1 ...`,
/// r = -1 encodes a missing range, labels {0=none,1=wall,2=door,3=window}.
void write_scan_log(const std::string& path, const std::vector<SedarScan>& scans);
std::vector<SedarScan> read_scan_log(const std::string& path);

/// Relative motion between consecutive trajectory poses, in the earlier
/// pose's frame.
struct OdometryRecord {
  double t = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dtheta = 0.0;
};

/// Odometry CSV: header `t,dx,dy,dtheta`, one relative motion per line.
void write_odometry_csv(const std::string& path, const std::vector<OdometryRecord>& records);
std::vector<OdometryRecord> read_odometry_csv(const std::string& path);

}  // namespace semloc
