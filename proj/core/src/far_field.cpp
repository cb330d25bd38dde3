#include "pass/far_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pass/constants.hpp"
#include "pass/errors.hpp"

namespace pass {

namespace {

using constants::kPi;
using constants::kSqrt2;
using constants::kTwoPi;

void require_matched(const PassConfiguration& cfg) {
  if (!cfg.phase_matched()) {
    throw NotImplementedError(
        "closed-form pattern requires phase-matched PAs (W_m = W_s)");
  }
}

Complex expj(double phase) { return std::polar(1.0, phase); }

}  // namespace

ApertureInterval aperture_interval(const PassConfiguration& cfg, PaSide side,
                                   ApertureModel model) {
  const double wm = cfg.main.width;
  const double ws = cfg.pa.width;
  const double center = cfg.pa_center(side);
  switch (model) {
    case ApertureModel::offset:
      return {wm, wm + ws, center};
    case ApertureModel::centered_offset:
      return {wm + 0.5 * ws, wm + 1.5 * ws, center};
    case ApertureModel::physical_core:
      if (side == PaSide::upper) return {0.5 * wm, 0.5 * wm + ws, center};
      return {-0.5 * wm - ws, -0.5 * wm, center};
  }
  return {wm, wm + ws, center};
}

double projection_factor(double phi) {
  const double r = wrap_two_pi(phi);
  if (r == 0.0 || r == kPi) return 0.0;
  return -std::sin(r);
}

Complex pattern_factor_x(const PassConfiguration& cfg, double kappa,
                         double phi) {
  require_matched(cfg);
  const double ls = cfg.pa_length;
  const double bsx = cfg.pa_mode.beta_x;
  const double kx = cfg.main.wavenumber() * std::cos(phi);
  const double omega_plus = 0.5 * ls * (kx - bsx + kSqrt2 * kappa);
  const double omega_minus = 0.5 * ls * (kx - bsx - kSqrt2 * kappa);
  const double delta = kappa * ls / kSqrt2;
  const Complex bracket = expj(delta) * sinc(omega_plus) -
                          expj(-delta) * sinc(omega_minus);
  return -(ls * cfg.input_amplitude / (2.0 * kSqrt2)) *
         expj((kx - bsx) * cfg.pa_position) * bracket;
}

Complex pattern_factor_y(const PassConfiguration& cfg, double phi, PaSide side,
                         ApertureModel model) {
  require_matched(cfg);
  const ApertureInterval ap = aperture_interval(cfg, side, model);
  const double width = ap.upper - ap.lower;
  const double mid = 0.5 * (ap.lower + ap.upper);
  const double bsy = cfg.pa_mode.beta_y;
  const double ky = cfg.main.wavenumber() * std::sin(phi);
  const double omega_plus = 0.5 * width * (ky + bsy);
  const double omega_minus = 0.5 * width * (ky - bsy);
  // The phase terms (k_y +- beta_sy) * mid are the delta_y^{+-} offsets.
  return 0.5 * width *
         (expj((ky + bsy) * mid - bsy * ap.center) * sinc(omega_plus) +
          expj((ky - bsy) * mid + bsy * ap.center) * sinc(omega_minus));
}

Complex pa_pattern(const PassConfiguration& cfg, double kappa, double phi,
                   PaSide side, ApertureModel model) {
  return projection_factor(phi) * pattern_factor_x(cfg, kappa, phi) *
         pattern_factor_y(cfg, phi, side, model);
}

Complex total_pattern(const PassConfiguration& cfg, double kappa, double phi,
                      ApertureModel model) {
  const double p = projection_factor(phi);
  if (p == 0.0) return 0.0;
  return p * pattern_factor_x(cfg, kappa, phi) *
         (pattern_factor_y(cfg, phi, PaSide::upper, model) +
          pattern_factor_y(cfg, phi, PaSide::lower, model));
}

std::vector<double> uniform_angle_grid(std::size_t n) {
  std::vector<double> phi(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Scaling pi by 2k/n keeps phi = pi exact when n is even.
    phi[k] = (2.0 * static_cast<double>(k) / static_cast<double>(n)) * kPi;
  }
  return phi;
}

std::vector<double> normalized_power_pattern(std::span<const Complex> pattern) {
  if (pattern.size() < 2) {
    throw ConfigError("power pattern needs at least two samples");
  }
  std::vector<double> g(pattern.size());
  std::transform(pattern.begin(), pattern.end(), g.begin(),
                 [](const Complex& f) { return std::norm(f); });
  const double peak = *std::max_element(g.begin(), g.end());
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    throw DegenerateError("radiation pattern is identically zero");
  }
  for (double& v : g) v /= peak;
  return g;
}

std::vector<double> directivity(std::span<const double> power,
                                std::span<const double> angles) {
  const std::size_t n = power.size();
  if (n < 2 || angles.size() != n) {
    throw ConfigError("directivity needs matching power and angle samples");
  }
  const double step = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(angles[k] - step * static_cast<double>(k)) > 1e-9) {
      throw ConfigError("directivity needs a uniform grid on [0, 2pi)");
    }
  }
  const double mean =
      std::accumulate(power.begin(), power.end(), 0.0) / static_cast<double>(n);
  if (!(mean > 0.0)) {
    throw DegenerateError("power pattern integrates to zero");
  }
  std::vector<double> d(n);
  std::transform(power.begin(), power.end(), d.begin(),
                 [mean](double g) { return g / mean; });
  return d;
}

double FarFieldPattern::directivity_at(double phi) const {
  const std::size_t n = directivity.size();
  const double pos = wrap_two_pi(phi) / (kTwoPi / static_cast<double>(n));
  auto i0 = static_cast<std::size_t>(std::floor(pos));
  if (i0 >= n) i0 = n - 1;
  const double t = pos - static_cast<double>(i0);
  const std::size_t i1 = (i0 + 1) % n;
  return (1.0 - t) * directivity[i0] + t * directivity[i1];
}

double FarFieldPattern::peak_directivity() const {
  return *std::max_element(directivity.begin(), directivity.end());
}

double FarFieldPattern::main_lobe_angle() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k < angles.size() && angles[k] <= kPi; ++k) {
    if (power_pattern[k] > power_pattern[best]) best = k;
  }
  return angles[best];
}

double FarFieldPattern::mean_directivity() const {
  return std::accumulate(directivity.begin(), directivity.end(), 0.0) /
         static_cast<double>(directivity.size());
}

FarFieldPattern make_pattern(std::vector<double> angles,
                             std::vector<Complex> complex_pattern) {
  FarFieldPattern p;
  p.power_pattern = normalized_power_pattern(complex_pattern);
  p.directivity = pass::directivity(p.power_pattern, angles);
  p.angles = std::move(angles);
  p.complex_pattern = std::move(complex_pattern);
  return p;
}

FarFieldPattern compute_pattern(const PassConfiguration& cfg, double kappa,
                                std::size_t samples, ApertureModel model) {
  std::vector<double> angles = uniform_angle_grid(samples);
  std::vector<Complex> f(samples);
  std::transform(angles.begin(), angles.end(), f.begin(),
                 [&](double phi) { return total_pattern(cfg, kappa, phi, model); });
  return make_pattern(std::move(angles), std::move(f));
}

Complex oracle_pa_integral(const PassConfiguration& cfg, double kappa,
                           double phi, PaSide side,
                           const OracleOptions& options) {
  const double beta0 = cfg.main.wavenumber();
  const double kx = beta0 * std::cos(phi);
  const double ky = beta0 * std::sin(phi);
  const double bsx = cfg.pa_mode.beta_x;
  const double bsy = cfg.pa_mode.beta_y;
  const double x0 = cfg.coupling_start();
  const double x1 = cfg.coupling_end();
  const ApertureInterval ap = aperture_interval(cfg, side, options.aperture);

  auto longitudinal = [&](double x) {
    const double local = std::clamp(x - x0, 0.0, cfg.pa_length);
    return mode_amplitudes(cfg, kappa, local).pa * expj((kx - bsx) * x);
  };
  auto transverse = [&](double y) {
    return std::cos(bsy * (y - ap.center)) * expj(ky * y);
  };

  if (options.quadrature == OracleQuadrature::separable) {
    return simpson(longitudinal, x0, x1, options.panels) *
           simpson(transverse, ap.lower, ap.upper, options.panels);
  }
  return simpson(
      [&](double x) {
        const Complex bx = longitudinal(x);
        return simpson([&](double y) { return bx * transverse(y); }, ap.lower,
                       ap.upper, options.panels);
      },
      x0, x1, options.panels);
}

Complex oracle_radiation_integral(const PassConfiguration& cfg, double kappa,
                                  double phi, const OracleOptions& options) {
  const double p = projection_factor(phi);
  if (p == 0.0) return 0.0;
  return p * (oracle_pa_integral(cfg, kappa, phi, PaSide::upper, options) +
              oracle_pa_integral(cfg, kappa, phi, PaSide::lower, options));
}

std::vector<Complex> oracle_pattern(const PassConfiguration& cfg, double kappa,
                                    std::span<const double> angles,
                                    const OracleOptions& options) {
  std::vector<Complex> f(angles.size());
  std::transform(angles.begin(), angles.end(), f.begin(), [&](double phi) {
    return oracle_radiation_integral(cfg, kappa, phi, options);
  });
  return f;
}

double max_magnitude_deviation(std::span<const Complex> a,
                               std::span<const Complex> b) {
  if (a.size() != b.size() || a.empty()) {
    throw ConfigError("pattern comparison needs equal, non-empty samples");
  }
  double ref = 0.0;
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ref = std::max(ref, std::abs(b[k]));
    dev = std::max(dev, std::abs(std::abs(a[k]) - std::abs(b[k])));
  }
  if (!(ref > 0.0)) throw DegenerateError("reference pattern is zero");
  return dev / ref;
}

}  // namespace pass
