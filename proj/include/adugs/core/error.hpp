#pragma once

#include <stdexcept>
#include <string>

namespace adugs {

/// Bad parameter combinations (radii ordering, probability ranges, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Unsupported file format version.
class VersionError : public std::runtime_error {
 public:
  explicit VersionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate geometry, singular systems, insufficient data.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace adugs
