#include "semloc/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semloc {

SedarScan strip_ranges(const SedarScan& scan) {
  SedarScan out = scan;
  for (auto& r : out.readings) r.range.reset();
  return out;
}

bool scan_has_ranges(const SedarScan& scan) {
  for (const auto& r : scan.readings)
    if (!r.range) return false;
  return true;
}

std::vector<double> bearings_for_camera(double horizontal_fov, int count) {
  if (horizontal_fov <= 0.0 || horizontal_fov >= M_PI)
    throw std::invalid_argument("fov must be in (0, pi)");
  if (count < 2) throw std::invalid_argument("need at least 2 rays");
  const double half_tan = std::tan(0.5 * horizontal_fov);
  std::vector<double> bearings(count);
  for (int k = 0; k < count; ++k) {
    // (2k - (K-1)) / (K-1) negates exactly under k <-> K-1-k, keeping the
    // fan antisymmetric in floating point.
    const double u = (2.0 * k - (count - 1)) / (count - 1);
    bearings[k] = std::atan(half_tan * u);
  }
  return bearings;
}

std::vector<double> bearings_equiangular(double horizontal_fov, int count) {
  if (horizontal_fov <= 0.0 || horizontal_fov >= M_PI)
    throw std::invalid_argument("fov must be in (0, pi)");
  if (count < 2) throw std::invalid_argument("need at least 2 rays");
  std::vector<double> bearings(count);
  for (int k = 0; k < count; ++k) {
    const double u = (2.0 * k - (count - 1)) / (count - 1);
    bearings[k] = 0.5 * horizontal_fov * u;
  }
  return bearings;
}

void write_scan_log(const std::string& path, const std::vector<SedarScan>& scans) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  char buf[96];
  for (const auto& scan : scans) {
    std::snprintf(buf, sizeof(buf), "%.9f", scan.timestamp);
    out << buf;
    for (const auto& r : scan.readings) {
      const double range = r.range ? *r.range : -1.0;
      const int code = r.label ? label_code(*r.label) : 0;
      std::snprintf(buf, sizeof(buf), " %.9f %.9f %d", r.bearing, range, code);
      out << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<SedarScan> read_scan_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<SedarScan> scans;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    SedarScan scan;
    if (!(ss >> scan.timestamp))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad timestamp");
    double bearing, range;
    int code;
    while (ss >> bearing >> range >> code) {
      SedarReading r;
      r.bearing = bearing;
      if (range >= 0.0) r.range = range;
      r.label = label_from_code(code);
      scan.readings.push_back(r);
    }
    if (!ss.eof())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed reading triple");
    if (scan.readings.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty scan");
    scans.push_back(std::move(scan));
  }
  return scans;
}

void write_odometry_csv(const std::string& path, const std::vector<OdometryRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "t,dx,dy,dtheta\n";
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%.9f,%.9f\n", r.t, r.dx, r.dy, r.dtheta);
    out << buf;
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<OdometryRecord> read_odometry_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<OdometryRecord> records;
  std::string line;
  bool first = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first && line.rfind("t,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    OdometryRecord r;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r.t, &r.dx, &r.dy, &r.dtheta) != 4)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected t,dx,dy,dtheta");
    records.push_back(r);
  }
  return records;
}

}  // namespace semloc
