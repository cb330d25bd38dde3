#pragma once

// Even TE0 mode of an isolated symmetric dielectric slab.
//
// The slab core of width W and index n1 is surrounded by a cladding of index
// n0 < n1. With u = beta_y W / 2, w = sigma W / 2 and the normalized frequency
// V = (beta0 W / 2) sqrt(n1^2 - n0^2), the even-mode dispersion relation is
//
//   u tan(u) = w,   u^2 + w^2 = V^2,
//
// which has exactly one root on (0, pi/2) for 0 < V < pi/2.

namespace pass {

struct SlabGeometry {
  double width = 0.0;       // [m]
  double core_index = 0.0;  // n1
  double clad_index = 1.0;  // n0
  double frequency = 0.0;   // [Hz]

  /// Throws ConfigError unless width > 0, f > 0 and n1 > n0 >= 1.
  void validate() const;

  /// Free-space wavenumber beta0 = 2 pi f sqrt(mu0 eps0) [rad/m].
  double wavenumber() const;
  double wavelength() const;
};

struct ModeSolution {
  double beta_x = 0.0;  // longitudinal propagation constant [rad/m]
  double beta_y = 0.0;  // transverse propagation constant [rad/m]
  double sigma = 0.0;   // cladding decay constant [1/m]
  double v_number = 0.0;
  double u = 0.0;
  double w = 0.0;

  double guided_wavelength() const;
};

double normalized_frequency(const SlabGeometry& geom);

/// Inverts normalized_frequency for the slab width. Throws MultimodeError for
/// v_target >= pi/2 and NoGuidedModeError for v_target <= 0.
double width_for_v(double core_index, double clad_index, double frequency,
                   double v_target);

/// Solves the even TE0 dispersion relation by bracketed bisection refined
/// with a safeguarded Newton step.
///
/// Throws MultimodeError (V >= pi/2), NoGuidedModeError (V <= 0) or
/// SolverError if the residual does not reach tolerance.
ModeSolution solve_te0(const SlabGeometry& geom);

}  // namespace pass
