#include "pass/link_model.hpp"

#include <cmath>

#include "pass/constants.hpp"
#include "pass/errors.hpp"

namespace pass {

void LinkScenario::validate() const {
  if (!(transmit_power > 0.0)) throw ConfigError("transmit power must be > 0");
  if (!(noise_power > 0.0)) throw ConfigError("noise power must be > 0");
}

double path_loss_constant(double frequency) {
  return constants::kSpeedOfLight /
         (4.0 * constants::kPi * constants::kPi * frequency);
}

double ue_angle(const PassConfiguration& cfg, Point2 ue) {
  return wrap_two_pi(std::atan2(ue.y, ue.x - cfg.pa_position));
}

ChannelCoefficient channel(const LinkScenario& scenario,
                           const FarFieldPattern& pattern,
                           const CouplingSolution& coupling,
                           PatternModel model) {
  scenario.validate();
  const PassConfiguration& cfg = scenario.cfg;
  ChannelCoefficient h;
  h.distance = std::hypot(scenario.ue.x - cfg.pa_position, scenario.ue.y);
  if (!(h.distance > 0.0)) {
    throw DegenerateError("UE coincides with the PA centre (r = 0)");
  }
  h.ue_angle = ue_angle(cfg, scenario.ue);
  h.path_loss_constant = path_loss_constant(cfg.main.frequency);
  h.coupled_fraction = coupled_powers(coupling.kappa, cfg.pa_length).pair();
  h.directivity = model == PatternModel::omni
                      ? 1.0
                      : pattern.directivity_at(h.ue_angle);
  h.guide_distance = cfg.pa_position;
  h.guided_wavelength = cfg.main_mode.guided_wavelength();
  h.magnitude = std::sqrt(h.path_loss_constant * h.coupled_fraction *
                          h.directivity / h.distance);
  const double wavelength = cfg.main.wavelength();
  h.phase = wrap_two_pi(-(constants::kTwoPi / h.guided_wavelength) *
                            h.guide_distance -
                        (constants::kTwoPi / wavelength) * h.distance);
  if (!std::isfinite(h.magnitude)) {
    throw DegenerateError("channel magnitude is not finite");
  }
  return h;
}

double spectral_efficiency(double gain, double snr, LogBase base) {
  const double r = std::log1p(gain * snr);
  return base == LogBase::two ? r / std::numbers::ln2 : r;
}

double spectral_efficiency(const LinkScenario& scenario,
                           const ChannelCoefficient& h, LogBase base) {
  scenario.validate();
  return spectral_efficiency(h.gain(), scenario.transmit_snr(), base);
}

}  // namespace pass
