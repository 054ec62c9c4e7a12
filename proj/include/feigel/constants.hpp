#pragma once

#include <numbers>

namespace feigel {

inline constexpr double pi = std::numbers::pi;

// SI constants for the CLI-boundary conversion layer. The library itself
// works in natural units hbar = c = eps0 = mu0 = 1.
inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double c_si = 299792458.0;         // m/s
inline constexpr double eps0_si = 8.8541878128e-12; // F/m

}  // namespace feigel
