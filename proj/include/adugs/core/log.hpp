#pragma once

namespace adugs::logging {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Threshold parsed once from ADUGS_LOG (error|warn|info|debug), default warn.
Level threshold();

/// printf-style, writes to stderr only.
void write(Level lvl, const char* fmt, ...);

}  // namespace adugs::logging

#define ADUGS_LOG_ERROR(...) \
  ::adugs::logging::write(::adugs::logging::Level::Error, __VA_ARGS__)
#define ADUGS_LOG_WARN(...) \
  ::adugs::logging::write(::adugs::logging::Level::Warn, __VA_ARGS__)
#define ADUGS_LOG_INFO(...) \
  ::adugs::logging::write(::adugs::logging::Level::Info, __VA_ARGS__)
#define ADUGS_LOG_DEBUG(...) \
  ::adugs::logging::write(::adugs::logging::Level::Debug, __VA_ARGS__)
