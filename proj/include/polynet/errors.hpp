#pragma once

#include <stdexcept>
#include <string>

namespace polynet {

/// Operand shapes disagree (matrix orders, vector lengths, placement dimensions).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input: labels out of range, repeated consecutive labels, bad text.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds the enumeration bounds this library is willing to run.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polynet
