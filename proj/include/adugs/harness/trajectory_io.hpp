#pragma once

#include <string>

#include "adugs/odometry/registration.hpp"

namespace adugs::harness {

/// TUM format: "timestamp tx ty tz qx qy qz qw", 9 fixed decimals, '#'
/// comments. Planar embedding: tz = 0, q = (0, 0, sin(theta/2), cos(theta/2)).
void write_trajectory(const odometry::Trajectory& traj, const std::string& path);

/// Throws ParseError (with line number) on malformed lines.
odometry::Trajectory read_trajectory(const std::string& path);

/// The trajectory as it reads back after writing: every field passed through
/// the 9-decimal fixed format. Metrics are computed on this form so the eval
/// subcommand reproduces them from the written files digit for digit.
odometry::Trajectory quantize_trajectory(const odometry::Trajectory& traj);

}  // namespace adugs::harness
