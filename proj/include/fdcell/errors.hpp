#pragma once

#include <stdexcept>
#include <string>

namespace fdcell {

/// Requested operation is outside the regime the scheme is defined for
/// (e.g. more BS receive antennas than UL users, or several DL users).
class unsupported_regime : public std::runtime_error {
 public:
  explicit unsupported_regime(const std::string& what) : std::runtime_error(what) {}
};

/// An object violates an invariant required by the operation (e.g. a
/// rank-deficient beamformer set fed to the rate computation).
class invalid_state : public std::runtime_error {
 public:
  explicit invalid_state(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdcell
