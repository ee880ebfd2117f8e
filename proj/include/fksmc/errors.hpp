#pragma once

#include <stdexcept>
#include <string>

namespace fksmc {

// Invalid user-facing configuration (bad schedule, unknown suite, ...).
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A caller violated an internal contract (unnormalized weights, empty input).
struct ContractError : std::invalid_argument {
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-finite values or otherwise broken numerics at runtime.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Every particle carries zero weight; the run cannot continue.
struct DegeneratePopulationError : std::runtime_error {
  explicit DegeneratePopulationError(const std::string& what) : std::runtime_error(what) {}
};

// The quadrature grid misses too much prior mass.
struct CoverageError : std::runtime_error {
  CoverageError(const std::string& what, double covered_mass)
      : std::runtime_error(what), covered_mass(covered_mass) {}
  double covered_mass;
};

}  // namespace fksmc
