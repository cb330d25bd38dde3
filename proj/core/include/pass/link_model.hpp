#pragma once

#include <complex>

#include "pass/far_field.hpp"
#include "pass/mode_coupling.hpp"

namespace pass {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Which radiation model the channel uses for D(phi).
enum class PatternModel { omni, directional };

enum class LogBase { two, natural };

struct LinkScenario {
  PassConfiguration cfg;
  Point2 ue;
  double transmit_power = 1.0;  // P_T [W]
  double noise_power = 1.0;     // sigma^2 [W]

  void validate() const;
  double transmit_snr() const { return transmit_power / noise_power; }
};

struct ChannelCoefficient {
  double magnitude = 0.0;
  double phase = 0.0;  // [rad], wrapped to [0, 2pi)

  // Audit trail for |h|^2 = eta * 2Ps * D / r.
  double path_loss_constant = 0.0;  // eta
  double coupled_fraction = 0.0;    // 2 Ps
  double directivity = 0.0;         // D(phi_ue)
  double distance = 0.0;            // r
  double guide_distance = 0.0;      // r_p
  double guided_wavelength = 0.0;   // lambda_g
  double ue_angle = 0.0;            // phi_ue in [0, 2pi)

  std::complex<double> value() const { return std::polar(magnitude, phase); }
  double gain() const { return magnitude * magnitude; }
};

/// eta = c / (4 pi^2 f), the 2D free-space path-loss constant.
double path_loss_constant(double frequency);

/// Direction of the UE seen from M_p = (x_p, 0), counterclockwise from +x.
double ue_angle(const PassConfiguration& cfg, Point2 ue);

ChannelCoefficient channel(const LinkScenario& scenario,
                           const FarFieldPattern& pattern,
                           const CouplingSolution& coupling,
                           PatternModel model = PatternModel::directional);

double spectral_efficiency(const LinkScenario& scenario,
                           const ChannelCoefficient& h,
                           LogBase base = LogBase::two);

/// log(1 + gain * snr) in the requested base.
double spectral_efficiency(double gain, double snr, LogBase base = LogBase::two);

}  // namespace pass
