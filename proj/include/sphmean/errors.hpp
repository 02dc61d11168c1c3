#pragma once

#include <stdexcept>
#include <string>

namespace sphmean {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation requested exactly on t = |x-z| or t = x+z.
struct SingularSurfaceError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  double achieved_error;
  ConvergenceError(const std::string& what, double err)
      : std::runtime_error(what), achieved_error(err) {}
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter line excluded from the theory (alpha + beta = -1/2 and friends).
struct ExcludedParameterError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace sphmean
