#include "adugs/core/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace adugs {

std::string fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt_f9(double v) {
  char buf[340];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

double quantize_g9(double v) { return std::strtod(fmt_g9(v).c_str(), nullptr); }

double quantize_f9(double v) { return std::strtod(fmt_f9(v).c_str(), nullptr); }

}  // namespace adugs
