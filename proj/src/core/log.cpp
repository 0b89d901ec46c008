#include "adugs/core/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace adugs::logging {

Level threshold() {
  static const Level lvl = [] {
    const char* env = std::getenv("ADUGS_LOG");
    if (env == nullptr) return Level::Warn;
    if (std::strcmp(env, "error") == 0) return Level::Error;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
  }();
  return lvl;
}

void write(Level lvl, const char* fmt, ...) {
  if (lvl > threshold()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[%s] ", names[static_cast<int>(lvl)]);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

}  // namespace adugs::logging
