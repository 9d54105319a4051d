#ifndef HARM_ERRORS_HPP
#define HARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace harm {

/// Bad inputs: malformed files, broken preconditions, inconsistent shapes.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failures at runtime: divergent chains, non-finite densities.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace harm

#endif
