#pragma once

#include <stdexcept>
#include <string>

namespace vfg {

/// Invalid scenario file, parameter set or override key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the integrator produces a non-finite state. Names the first
/// offending quantity and the simulation time at which it appeared.
struct SimulationDiverged : std::runtime_error {
  SimulationDiverged(const std::string& quantity_name, double t);
  std::string quantity;
  double time;
};

/// A log is too short for the requested analysis.
struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vfg
