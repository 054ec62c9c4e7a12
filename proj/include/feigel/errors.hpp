#pragma once

#include <stdexcept>
#include <string>

namespace feigel {

/// Spectral point sits on a degeneracy of the reduced wave operator
/// (k_x = zeta = 0 on the imaginary axis, or the light cone kappa^2 = 0).
struct DegeneratePoint : std::domain_error {
    explicit DegeneratePoint(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget before reaching
/// the requested tolerance.
struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

/// Finite-difference step failed the second-order Richardson sanity check
/// (non-smooth input or step too coarse/fine).
struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Run configuration failed schema validation; message names the key.
struct ConfigInvalid : std::runtime_error {
    explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace feigel
