#pragma once

#include <numbers>

namespace pass::constants {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

inline constexpr double kSpeedOfLight = 299792458.0;      // [m/s]
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // [H/m]
// Chosen so that mu0 * eps0 * c^2 == 1 to rounding.
inline constexpr double kVacuumPermittivity =
    1.0 / (kVacuumPermeability * kSpeedOfLight * kSpeedOfLight);  // [F/m]

}  // namespace pass::constants
