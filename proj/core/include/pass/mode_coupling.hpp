#pragma once

#include <complex>

#include "pass/slab_modes.hpp"

namespace pass {

enum class PaSide { upper, lower };

/// Main waveguide plus two identical pinching antennas attached symmetrically
/// to its upper and lower faces, centred at x = pa_position.
struct PassConfiguration {
  SlabGeometry main;
  ModeSolution main_mode;
  SlabGeometry pa;
  ModeSolution pa_mode;
  double pa_length = 0.0;         // Ls [m]
  double pa_position = 0.0;       // x_p [m]
  double waveguide_length = 0.0;  // L [m]
  double input_amplitude = 1.0;   // A0

  /// Solves both slabs and checks Ls/2 <= x_p <= L - Ls/2.
  static PassConfiguration make(const SlabGeometry& main,
                                const SlabGeometry& pa, double pa_length,
                                double pa_position, double waveguide_length,
                                double input_amplitude = 1.0);

  PassConfiguration with_pa_length(double length) const;
  PassConfiguration with_pa_position(double position) const;

  double pa_center(PaSide side) const;  // y_u or y_d
  double coupling_start() const { return pa_position - 0.5 * pa_length; }
  double coupling_end() const { return pa_position + 0.5 * pa_length; }

  /// Delta = beta_sx - beta_mx.
  double phase_mismatch() const;
  bool phase_matched() const;
};

struct CouplingSolution {
  double kappa = 0.0;            // [rad/m]
  double coupling_length = 0.0;  // Lc [m]
  double delta = 0.0;            // [rad/m]
};

/// N_m: integral of |E_m(y)|^2 over the whole transverse axis.
double normalization_integral(const PassConfiguration& cfg);

/// I_ms: overlap of the main core field with the evanescent tail of one PA,
/// taken over the main core (-W_m/2, W_m/2).
double overlap_integral(const PassConfiguration& cfg);

/// Closed-form coupling coefficient kappa_m between the main waveguide and
/// each PA, built from normalization_integral() and overlap_integral().
double coupling_coefficient(const PassConfiguration& cfg);

/// Shortest length for complete transfer to the PA pair: pi / (2 sqrt(2) kappa).
double coupling_length(double kappa);

/// Coupling of the phase-matched configuration. Throws NotImplementedError
/// when the main guide and the PAs are not phase matched.
CouplingSolution solve_coupling(const PassConfiguration& cfg);

struct ModeAmplitudes {
  std::complex<double> main;  // A
  std::complex<double> pa;    // B (same for both PAs)
};

/// A and B at local coordinate x_local in [0, Ls] measured from the start of
/// the coupling region.
ModeAmplitudes mode_amplitudes(const PassConfiguration& cfg, double kappa,
                               double x_local);

/// A(x) for global x in [0, L].
std::complex<double> amplitude_along_guide(const PassConfiguration& cfg,
                                           double kappa, double x);

struct CoupledPowers {
  double main = 1.0;    // P_m
  double per_pa = 0.0;  // P_s

  double pair() const { return 2.0 * per_pa; }
};

/// Normalized powers after a coupling length x_local >= 0. x_local may
/// exceed Ls so that sweeps over Ls can reuse it.
CoupledPowers coupled_powers(double kappa, double x_local);

/// Reference model for a single PA on one face: the synchronous two-guide
/// solution sin^2(kappa x). Not used by the symmetric configuration.
double single_pa_coupled_power(double kappa, double x_local);

double transverse_profile_main(const PassConfiguration& cfg, double y);
double transverse_profile_pa(const PassConfiguration& cfg, PaSide side,
                             double y);

/// Field carried by PA `side`; zero outside the coupling region.
std::complex<double> pa_field(const PassConfiguration& cfg, double kappa,
                              double x, double y, PaSide side);

}  // namespace pass
