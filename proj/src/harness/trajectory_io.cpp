#include "adugs/harness/trajectory_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "adugs/core/error.hpp"
#include "adugs/core/format.hpp"

namespace adugs::harness {

void write_trajectory(const odometry::Trajectory& traj,
                      const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("write_trajectory: cannot open " + path);
  f << "# timestamp tx ty tz qx qy qz qw\n";
  for (const odometry::TimedPose& p : traj.points) {
    const double qz = std::sin(0.5 * p.pose.theta);
    const double qw = std::cos(0.5 * p.pose.theta);
    f << fmt_f9(p.t) << " " << fmt_f9(p.pose.x) << " " << fmt_f9(p.pose.y)
      << " " << fmt_f9(0.0) << " " << fmt_f9(0.0) << " " << fmt_f9(0.0)
      << " " << fmt_f9(qz) << " " << fmt_f9(qw) << "\n";
  }
  if (!f) throw ConfigError("write_trajectory: write failed for " + path);
}

odometry::Trajectory read_trajectory(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("read_trajectory: cannot open " + path);

  odometry::Trajectory traj;
  std::string raw;
  int line_no = 0;
  while (std::getline(f, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;

    std::istringstream ss(raw);
    double v[8];
    int n = 0;
    std::string tok;
    while (ss >> tok) {
      if (n >= 8) throw ParseError("expected 8 fields", line_no);
      char* end = nullptr;
      v[n] = std::strtod(tok.c_str(), &end);
      if (end == nullptr || *end != '\0') {
        throw ParseError("bad number: " + tok, line_no);
      }
      ++n;
    }
    if (n != 8) {
      throw ParseError("expected 8 fields, got " + std::to_string(n), line_no);
    }
    // planar embedding: theta recovered from (qz, qw)
    const double theta = 2.0 * std::atan2(v[6], v[7]);
    traj.points.push_back({v[0], {v[1], v[2], wrap_angle(theta)}});
  }
  return traj;
}

odometry::Trajectory quantize_trajectory(const odometry::Trajectory& traj) {
  odometry::Trajectory out;
  out.points.reserve(traj.size());
  for (const odometry::TimedPose& p : traj.points) {
    const double qz = quantize_f9(std::sin(0.5 * p.pose.theta));
    const double qw = quantize_f9(std::cos(0.5 * p.pose.theta));
    out.points.push_back({quantize_f9(p.t),
                          {quantize_f9(p.pose.x), quantize_f9(p.pose.y),
                           wrap_angle(2.0 * std::atan2(qz, qw))}});
  }
  return out;
}

}  // namespace adugs::harness
