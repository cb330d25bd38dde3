#include "pass/mode_coupling.hpp"

#include <cmath>
#include <string>

#include "pass/constants.hpp"
#include "pass/errors.hpp"

namespace pass {

namespace {

using constants::kSqrt2;

constexpr double kPhaseMatchTol = 1e-12;

void check_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("coupling coefficient must be finite and positive");
  }
}

// Even slab profile centred at y = center, with amplitude `amp` at the centre.
double slab_profile(double amp, double beta_y, double sigma, double width,
                    double center, double y) {
  const double d = std::abs(y - center);
  const double half = 0.5 * width;
  if (d <= half) return amp * std::cos(beta_y * (y - center));
  return amp * std::cos(beta_y * half) * std::exp(-sigma * (d - half));
}

}  // namespace

PassConfiguration PassConfiguration::make(const SlabGeometry& main,
                                          const SlabGeometry& pa,
                                          double pa_length,
                                          double pa_position,
                                          double waveguide_length,
                                          double input_amplitude) {
  PassConfiguration cfg;
  cfg.main = main;
  cfg.pa = pa;
  cfg.main_mode = solve_te0(main);
  cfg.pa_mode = solve_te0(pa);
  if (main.frequency != pa.frequency) {
    throw ConfigError("main waveguide and PAs must share one frequency");
  }
  if (main.core_index != pa.core_index || main.clad_index != pa.clad_index) {
    throw ConfigError("main waveguide and PAs must share the same materials");
  }
  if (!(pa_length >= 0.0)) throw ConfigError("PA length must be >= 0");
  if (!(waveguide_length > pa_length)) {
    throw ConfigError("waveguide length must exceed the PA length");
  }
  if (!(input_amplitude > 0.0)) {
    throw ConfigError("input amplitude must be positive");
  }
  cfg.pa_length = pa_length;
  cfg.waveguide_length = waveguide_length;
  cfg.input_amplitude = input_amplitude;
  return cfg.with_pa_position(pa_position);
}

PassConfiguration PassConfiguration::with_pa_length(double length) const {
  return make(main, pa, length, pa_position, waveguide_length,
              input_amplitude);
}

PassConfiguration PassConfiguration::with_pa_position(double position) const {
  const double half = 0.5 * pa_length;
  // Relative slack absorbs grid points computed as start + k * step.
  const double slack = 1e-12 * waveguide_length;
  if (!(position >= half - slack && position <= waveguide_length - half + slack)) {
    throw ConfigError("PA position " + std::to_string(position) +
                      " m outside [Ls/2, L - Ls/2]");
  }
  PassConfiguration out = *this;
  out.pa_position = position;
  return out;
}

double PassConfiguration::pa_center(PaSide side) const {
  const double y = 0.5 * (main.width + pa.width);
  return side == PaSide::upper ? y : -y;
}

double PassConfiguration::phase_mismatch() const {
  return pa_mode.beta_x - main_mode.beta_x;
}

bool PassConfiguration::phase_matched() const {
  return std::abs(phase_mismatch()) <=
         kPhaseMatchTol * std::abs(main_mode.beta_x);
}

double normalization_integral(const PassConfiguration& cfg) {
  const double wm = cfg.main.width;
  const double by = cfg.main_mode.beta_y;
  const double c = std::cos(0.5 * by * wm);
  const double a0 = cfg.input_amplitude;
  return a0 * a0 *
         (0.5 * wm + std::sin(by * wm) / (2.0 * by) +
          c * c / cfg.main_mode.sigma);
}

double overlap_integral(const PassConfiguration& cfg) {
  const double wm = cfg.main.width;
  const double ws = cfg.pa.width;
  const double bmy = cfg.main_mode.beta_y;
  const double bsy = cfg.pa_mode.beta_y;
  const double ss = cfg.pa_mode.sigma;
  const double a0 = cfg.input_amplitude;
  const double h = 0.5 * wm;
  const double bracket =
      2.0 * ss * std::cos(bmy * h) * std::sinh(ss * h) +
      2.0 * bmy * std::sin(bmy * h) * std::cosh(ss * h);
  return a0 * a0 * std::cos(0.5 * bsy * ws) * std::exp(-ss * h) * bracket /
         (ss * ss + bmy * bmy);
}

double coupling_coefficient(const PassConfiguration& cfg) {
  const double beta0 = cfg.main.wavenumber();
  const double n1 = cfg.main.core_index;
  const double n0 = cfg.main.clad_index;
  // omega eps0 (n1^2 - n0^2) / (2 beta_mx / (omega mu0)) collapses to
  // beta0^2 (n1^2 - n0^2) / (2 beta_mx).
  const double prefactor =
      beta0 * beta0 * (n1 * n1 - n0 * n0) / (2.0 * cfg.main_mode.beta_x);
  return prefactor * overlap_integral(cfg) / normalization_integral(cfg);
}

double coupling_length(double kappa) {
  check_kappa(kappa);
  return constants::kPi / (2.0 * kSqrt2 * kappa);
}

CouplingSolution solve_coupling(const PassConfiguration& cfg) {
  const double delta = cfg.phase_mismatch();
  if (!cfg.phase_matched()) {
    throw NotImplementedError(
        "mode amplitudes are only available for phase-matched PAs (W_m = W_s); "
        "Delta = " + std::to_string(delta) + " rad/m");
  }
  CouplingSolution sol;
  sol.kappa = coupling_coefficient(cfg);
  sol.coupling_length = coupling_length(sol.kappa);
  sol.delta = 0.0;
  return sol;
}

ModeAmplitudes mode_amplitudes(const PassConfiguration& cfg, double kappa,
                               double x_local) {
  check_kappa(kappa);
  if (!(x_local >= 0.0 && x_local <= cfg.pa_length)) {
    throw DomainError("local coordinate outside [0, Ls]");
  }
  const double arg = kSqrt2 * kappa * x_local;
  const double a0 = cfg.input_amplitude;
  return {std::complex<double>(a0 * std::cos(arg), 0.0),
          std::complex<double>(0.0, -a0 / kSqrt2 * std::sin(arg))};
}

std::complex<double> amplitude_along_guide(const PassConfiguration& cfg,
                                           double kappa, double x) {
  check_kappa(kappa);
  if (!(x >= 0.0 && x <= cfg.waveguide_length)) {
    throw DomainError("x outside [0, L]");
  }
  const double a0 = cfg.input_amplitude;
  if (x < cfg.coupling_start()) return a0;
  if (x > cfg.coupling_end()) {
    return a0 * std::cos(kSqrt2 * kappa * cfg.pa_length);
  }
  return a0 * std::cos(kSqrt2 * kappa * (x - cfg.coupling_start()));
}

CoupledPowers coupled_powers(double kappa, double x_local) {
  check_kappa(kappa);
  if (!(x_local >= 0.0)) throw DomainError("coupling length must be >= 0");
  const double arg = kSqrt2 * kappa * x_local;
  const double c = std::cos(arg);
  const double s = std::sin(arg);
  return {c * c, 0.5 * s * s};
}

double single_pa_coupled_power(double kappa, double x_local) {
  check_kappa(kappa);
  if (!(x_local >= 0.0)) throw DomainError("coupling length must be >= 0");
  const double s = std::sin(kappa * x_local);
  return s * s;
}

double transverse_profile_main(const PassConfiguration& cfg, double y) {
  return slab_profile(cfg.input_amplitude, cfg.main_mode.beta_y,
                      cfg.main_mode.sigma, cfg.main.width, 0.0, y);
}

double transverse_profile_pa(const PassConfiguration& cfg, PaSide side,
                             double y) {
  // B0s = A0 (equal-amplitude normalization).
  return slab_profile(cfg.input_amplitude, cfg.pa_mode.beta_y,
                      cfg.pa_mode.sigma, cfg.pa.width, cfg.pa_center(side), y);
}

std::complex<double> pa_field(const PassConfiguration& cfg, double kappa,
                              double x, double y, PaSide side) {
  check_kappa(kappa);
  if (x < cfg.coupling_start() || x > cfg.coupling_end()) return 0.0;
  const double a0 = cfg.input_amplitude;
  const double envelope =
      std::sin(kSqrt2 * kappa * (x - cfg.coupling_start()));
  const std::complex<double> b(0.0, -a0 / kSqrt2 * envelope);
  return b * transverse_profile_pa(cfg, side, y) * std::polar(1.0, -cfg.pa_mode.beta_x * x);
}

}  // namespace pass
