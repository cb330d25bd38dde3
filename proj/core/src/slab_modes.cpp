#include "pass/slab_modes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pass/constants.hpp"
#include "pass/errors.hpp"

namespace pass {

namespace {

constexpr double kBracketEps = 1e-9;
constexpr double kRootTol = 1e-12;
constexpr int kMaxIterations = 200;

void check_v(double v) {
  if (!(v > 0.0)) {
    throw NoGuidedModeError("normalized frequency V = " + std::to_string(v) +
                            " admits no guided mode");
  }
  if (v >= constants::kPi / 2.0) {
    throw MultimodeError("normalized frequency V = " + std::to_string(v) +
                         " >= pi/2: slab is not single-mode");
  }
}

// g(u) = u tan(u) - sqrt(V^2 - u^2); increasing on (0, min(V, pi/2)).
double residual(double u, double v) {
  return u * std::tan(u) - std::sqrt(std::max(v * v - u * u, 0.0));
}

double residual_slope(double u, double v) {
  const double c = std::cos(u);
  const double w = std::sqrt(std::max(v * v - u * u, 0.0));
  const double dw = w > 0.0 ? u / w : 0.0;
  return std::tan(u) + u / (c * c) + dw;
}

}  // namespace

void SlabGeometry::validate() const {
  if (!(width > 0.0)) throw ConfigError("slab width must be positive");
  if (!(frequency > 0.0)) throw ConfigError("frequency must be positive");
  if (!(clad_index >= 1.0)) throw ConfigError("cladding index must be >= 1");
  if (!(core_index > clad_index)) {
    throw ConfigError("core index must exceed cladding index");
  }
}

double SlabGeometry::wavenumber() const {
  return constants::kTwoPi * frequency *
         std::sqrt(constants::kVacuumPermeability *
                   constants::kVacuumPermittivity);
}

double SlabGeometry::wavelength() const {
  return constants::kTwoPi / wavenumber();
}

double ModeSolution::guided_wavelength() const {
  return constants::kTwoPi / beta_x;
}

double normalized_frequency(const SlabGeometry& geom) {
  geom.validate();
  const double na = std::sqrt(geom.core_index * geom.core_index -
                              geom.clad_index * geom.clad_index);
  return 0.5 * geom.wavenumber() * geom.width * na;
}

double width_for_v(double core_index, double clad_index, double frequency,
                   double v_target) {
  check_v(v_target);
  SlabGeometry probe{1.0, core_index, clad_index, frequency};
  probe.validate();
  const double na =
      std::sqrt(core_index * core_index - clad_index * clad_index);
  return 2.0 * v_target / (probe.wavenumber() * na);
}

ModeSolution solve_te0(const SlabGeometry& geom) {
  const double v = normalized_frequency(geom);
  check_v(v);

  double lo = std::min(kBracketEps, 0.5 * v);
  double hi = std::min(v, constants::kPi / 2.0 - kBracketEps);
  if (residual(lo, v) > 0.0 || residual(hi, v) < 0.0) {
    throw SolverError("TE0 root is not bracketed", residual(lo, v));
  }

  // Coarse bisection, then Newton steps that are rejected whenever they leave
  // the current bracket.
  int iter = 0;
  while (hi - lo > 1e-6 * v && iter < kMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid, v) < 0.0 ? lo : hi) = mid;
    ++iter;
  }
  double u = 0.5 * (lo + hi);
  for (; iter < kMaxIterations; ++iter) {
    const double g = residual(u, v);
    if (g == 0.0) break;
    (g < 0.0 ? lo : hi) = u;
    double next = u - g / residual_slope(u, v);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - u);
    u = next;
    if (step < kRootTol * std::max(1.0, u) || hi - lo < kRootTol * u) break;
  }

  const double w = std::sqrt(v * v - u * u);
  const double tail = std::abs(u * std::tan(u) - w);
  if (!(tail < 1e-10) || !std::isfinite(u)) {
    throw SolverError("TE0 solver did not converge", tail);
  }

  const double beta0 = geom.wavenumber();
  ModeSolution m;
  m.v_number = v;
  m.u = u;
  m.w = w;
  m.beta_y = 2.0 * u / geom.width;
  m.sigma = 2.0 * w / geom.width;
  const double k1 = beta0 * geom.core_index;
  m.beta_x = std::sqrt(k1 * k1 - m.beta_y * m.beta_y);
  return m;
}

}  // namespace pass
