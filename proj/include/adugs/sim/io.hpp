#pragma once

#include <string>

#include "adugs/sim/scene.hpp"

namespace adugs::sim {

/// Line-oriented text format, header "ADUGS-SIM 1". Reals carry 9
/// significant digits; generated scenes are quantized to that precision, so
/// load(save(s)) == s exactly.
void save_scene(const Scene& scene, const std::string& path);

/// Throws ParseError (with line number) on malformed input and VersionError
/// on an unsupported header version.
Scene load_scene(const std::string& path);

}  // namespace adugs::sim
