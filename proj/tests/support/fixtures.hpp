#pragma once

// Shared scenarios and test-only oracles. Nothing in here calls the closed
// forms it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>

#include "pass/constants.hpp"
#include "pass/mode_coupling.hpp"
#include "pass/numerics.hpp"
#include "pass/slab_modes.hpp"

namespace pass::testing {

inline constexpr double kF0 = 60e9;
inline const double kN1 = std::sqrt(2.1);
inline constexpr double kN0 = 1.0;

inline SlabGeometry slab_for_v(double v, double f = kF0, double n1 = kN1,
                               double n0 = kN0) {
  return SlabGeometry{width_for_v(n1, n0, f, v), n1, n0, f};
}

inline double baseline_wavelength() { return slab_for_v(1.5).wavelength(); }

/// Symmetric phase-matched PASS at the baseline parameters.
inline PassConfiguration baseline_config(double v = 1.5,
                                       double pa_length_lambda = 2.0,
                                       double waveguide_length = 40.0,
                                       double pa_position = 20.0) {
  const SlabGeometry slab = slab_for_v(v);
  return PassConfiguration::make(slab, slab, pa_length_lambda * slab.wavelength(),
                                 pa_position, waveguide_length);
}

/// Dense sign scan of u tan(u) - sqrt(V^2 - u^2) on (0, min(V, pi/2))
/// followed by plain bisection of the first sign change.
inline double oracle_te0_root(double v, std::size_t points = 1'000'000) {
  auto g = [v](double u) { return u * std::tan(u) - std::sqrt(v * v - u * u); };
  const double hi_end = std::min(v, constants::kPi / 2.0);
  double prev_u = 0.0;
  double prev_g = g(0.0);
  for (std::size_t i = 1; i <= points; ++i) {
    double u = hi_end * static_cast<double>(i) / static_cast<double>(points);
    if (i == points) u = std::nextafter(hi_end, 0.0);
    const double gu = g(u);
    if ((prev_g < 0.0) != (gu < 0.0)) {
      double lo = prev_u;
      double hi = u;
      for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_u = u;
    prev_g = gu;
  }
  return std::nan("");
}

/// Transverse profile of an even slab mode, written out independently of
/// the library's profile functions.
struct OracleProfile {
  double amplitude;
  double beta_y;
  double sigma;
  double width;
  double center;

  double operator()(double y) const {
    const double d = std::abs(y - center);
    if (d <= 0.5 * width) return amplitude * std::cos(beta_y * (y - center));
    return amplitude * std::cos(0.5 * beta_y * width) *
           std::exp(-sigma * (d - 0.5 * width));
  }

  // Distance past the interface at which the evanescent factor drops below
  // 1e-12 of its interface value.
  double tail_extent() const { return std::log(1e12) / sigma; }
};

inline OracleProfile main_profile(const PassConfiguration& cfg) {
  return {cfg.input_amplitude, cfg.main_mode.beta_y, cfg.main_mode.sigma,
          cfg.main.width, 0.0};
}

inline OracleProfile pa_profile(const PassConfiguration& cfg, PaSide side) {
  const double yc = 0.5 * (cfg.main.width + cfg.pa.width);
  return {cfg.input_amplitude, cfg.pa_mode.beta_y, cfg.pa_mode.sigma,
          cfg.pa.width, side == PaSide::upper ? yc : -yc};
}

/// Integral of p(y)^2 over the real line by composite Simpson, split at the
/// core interfaces and truncated where the tail factor falls below 1e-12.
inline double oracle_norm(const OracleProfile& p, std::size_t panels = 100'000) {
  auto sq = [&](double y) { return p(y) * p(y); };
  const double a = p.center - 0.5 * p.width;
  const double b = p.center + 0.5 * p.width;
  const double t = p.tail_extent();
  return simpson(sq, a - t, a, panels) + simpson(sq, a, b, panels) +
         simpson(sq, b, b + t, panels);
}

/// Coupling coefficient straight from the CMT overlap formula
///   kappa = w eps0 (n1^2 - n0^2) int_core E_from E_to dy
///           / ((2 beta_from / (w mu0)) int |E_from|^2 dy)
/// with both integrals by Simpson quadrature. `from` is the guide whose core
/// bounds the overlap integral.
inline double oracle_kappa(const SlabGeometry& geom, double beta_from,
                           const OracleProfile& from, const OracleProfile& to,
                           std::size_t panels = 100'000) {
  const double omega = constants::kTwoPi * geom.frequency;
  const double dn2 = geom.core_index * geom.core_index -
                     geom.clad_index * geom.clad_index;
  const double overlap =
      simpson([&](double y) { return from(y) * to(y); },
              from.center - 0.5 * from.width, from.center + 0.5 * from.width,
              panels);
  const double numerator = omega * constants::kVacuumPermittivity * dn2 * overlap;
  const double denominator =
      2.0 * beta_from / (omega * constants::kVacuumPermeability) *
      oracle_norm(from, panels);
  return numerator / denominator;
}

inline double oracle_kappa_main_to_pa(const PassConfiguration& cfg,
                                      std::size_t panels = 100'000) {
  return oracle_kappa(cfg.main, cfg.main_mode.beta_x, main_profile(cfg),
                      pa_profile(cfg, PaSide::upper), panels);
}

inline double oracle_kappa_pa_to_main(const PassConfiguration& cfg,
                                      std::size_t panels = 100'000) {
  return oracle_kappa(cfg.pa, cfg.pa_mode.beta_x, pa_profile(cfg, PaSide::upper),
                      main_profile(cfg), panels);
}

/// Longitudinal aperture integral with the PA amplitude written out
/// directly: B(x) = -j A0 / sqrt(2) sin(sqrt(2) kappa (x - x_start)).
inline std::complex<double> oracle_longitudinal(const PassConfiguration& cfg,
                                                double kappa, double phi,
                                                std::size_t panels = 4096) {
  const double kx = cfg.main.wavenumber() * std::cos(phi);
  const double x0 = cfg.pa_position - 0.5 * cfg.pa_length;
  const double bsx = cfg.pa_mode.beta_x;
  auto f = [&](double x) {
    const std::complex<double> b(
        0.0, -cfg.input_amplitude / constants::kSqrt2 *
                 std::sin(constants::kSqrt2 * kappa * (x - x0)));
    return b * std::polar(1.0, (kx - bsx) * x);
  };
  return simpson(f, x0, x0 + cfg.pa_length, panels);
}

inline std::complex<double> oracle_transverse(double beta_y, double center,
                                              double lo, double hi, double ky,
                                              std::size_t panels = 4096) {
  auto f = [&](double y) {
    return std::cos(beta_y * (y - center)) * std::polar(1.0, ky * y);
  };
  return simpson(f, lo, hi, panels);
}

}  // namespace pass::testing
