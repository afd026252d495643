#pragma once

#include <stdexcept>
#include <string>

namespace sprayplan {

/// Bad user input: malformed files, out-of-range values, inconsistent config.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem trouble: missing inputs, unwritable outputs.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sprayplan
