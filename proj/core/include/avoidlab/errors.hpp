#pragma once

#include <stdexcept>
#include <string>

namespace avoidlab {

/// Input breaks a documented precondition (bad notation, missing values,
/// a 132 where none is allowed, ...). Maps to CLI exit code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A resource guard was exceeded (full-factorial or structural enumeration
/// limits). Maps to CLI exit code 4.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Checked 64-bit arithmetic left the representable range. Counters never
/// wrap silently.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace avoidlab
