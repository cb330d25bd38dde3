#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pass/mode_coupling.hpp"
#include "pass/numerics.hpp"

namespace pass {

inline constexpr std::size_t kDefaultAngleSamples = 1440;  // 0.25 deg

/// Transverse extent of the radiating aperture of each PA.
///
/// offset           y' in [W_m, W_m + W_s]; the lower PA uses the same
///                  interval with the sign of y_s flipped.
/// centered_offset  y' in [W_m + W_s/2, W_m + 3W_s/2], i.e. midpoint at
///                  W_m + W_s; lower PA as above.
/// physical_core    y' over the actual PA core [W_m/2, W_m/2 + W_s]; the
///                  lower PA is its mirror image.
enum class ApertureModel { offset, centered_offset, physical_core };

struct ApertureInterval {
  double lower = 0.0;
  double upper = 0.0;
  double center = 0.0;  // y_s in cos(beta_sy (y' - y_s))
};

ApertureInterval aperture_interval(const PassConfiguration& cfg, PaSide side,
                                   ApertureModel model);

/// -sin(phi), exactly zero on the waveguide axis.
double projection_factor(double phi);

/// Longitudinal pattern component F_x(phi).
Complex pattern_factor_x(const PassConfiguration& cfg, double kappa,
                         double phi);

/// Transverse pattern component F_y(phi) of one PA.
Complex pattern_factor_y(const PassConfiguration& cfg, double phi, PaSide side,
                         ApertureModel model = ApertureModel::offset);

/// P(phi) F_x(phi) F_y(phi) for a single PA.
Complex pa_pattern(const PassConfiguration& cfg, double kappa, double phi,
                   PaSide side,
                   ApertureModel model = ApertureModel::offset);

/// Coherent sum of the upper and lower PA patterns.
Complex total_pattern(const PassConfiguration& cfg, double kappa, double phi,
                      ApertureModel model = ApertureModel::offset);

/// Uniform grid phi_k = 2 pi k / n, k = 0..n-1.
std::vector<double> uniform_angle_grid(std::size_t n);

/// G = |F|^2 / max |F|^2. Throws DegenerateError for an all-zero pattern and
/// ConfigError for fewer than two samples.
std::vector<double> normalized_power_pattern(std::span<const Complex> pattern);

/// D = G / ((1/2pi) closed integral of G), periodic trapezoid on a uniform
/// grid covering [0, 2pi).
std::vector<double> directivity(std::span<const double> power,
                                std::span<const double> angles);

struct FarFieldPattern {
  std::vector<double> angles;
  std::vector<Complex> complex_pattern;
  std::vector<double> power_pattern;
  std::vector<double> directivity;

  /// Periodic linear interpolation of D on the sample grid.
  double directivity_at(double phi) const;
  double peak_directivity() const;
  /// Angle of the largest G sample on the upper half-plane [0, pi].
  double main_lobe_angle() const;
  /// (1/2pi) closed integral of D.
  double mean_directivity() const;
};

FarFieldPattern make_pattern(std::vector<double> angles,
                             std::vector<Complex> complex_pattern);

FarFieldPattern compute_pattern(
    const PassConfiguration& cfg, double kappa,
    std::size_t samples = kDefaultAngleSamples,
    ApertureModel model = ApertureModel::offset);

// Brute-force evaluation of the aperture radiation integral. Used to check
// the closed forms above.
enum class OracleQuadrature { separable, tensor_product };

struct OracleOptions {
  ApertureModel aperture = ApertureModel::offset;
  std::size_t panels = 2048;  // per dimension
  OracleQuadrature quadrature = OracleQuadrature::separable;
};

Complex oracle_pa_integral(const PassConfiguration& cfg, double kappa,
                           double phi, PaSide side,
                           const OracleOptions& options = {});

Complex oracle_radiation_integral(const PassConfiguration& cfg, double kappa,
                                  double phi,
                                  const OracleOptions& options = {});

std::vector<Complex> oracle_pattern(const PassConfiguration& cfg, double kappa,
                                    std::span<const double> angles,
                                    const OracleOptions& options = {});

/// max_k ||a_k| - |b_k|| / max_k |b_k|.
double max_magnitude_deviation(std::span<const Complex> a,
                               std::span<const Complex> b);

}  // namespace pass
