#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pass/far_field.hpp"
#include "pass/link_model.hpp"
#include "pass/mode_coupling.hpp"

namespace pass {

enum class Scheme { fixed_antenna, omni_optimized, directional_optimized };

inline constexpr std::array<Scheme, 3> kAllSchemes = {
    Scheme::fixed_antenna, Scheme::omni_optimized,
    Scheme::directional_optimized};

std::string_view to_string(Scheme scheme);

std::vector<double> default_snr_grid_db();

struct SimulationPlan {
  double waveguide_length = 40.0;  // [m]
  double ue_height = 5.0;          // waveguide height above the UE [m]
  std::size_t num_drops = 10000;
  std::vector<double> snr_db = default_snr_grid_db();
  double grid_resolution = 0.01;  // [m]
  std::uint64_t seed = 1;
  std::optional<double> fixed_position;  // defaults to L/2
  LogBase log_base = LogBase::two;
  std::size_t threads = 0;  // 0: hardware concurrency

  void validate() const;
};

/// Candidate PA centres x_p = Ls/2 + k * resolution inside [Ls/2, L - Ls/2].
std::vector<double> placement_grid(double waveguide_length, double pa_length,
                                   double resolution);

/// Reproducible UE abscissa for drop `index`: uniform on [0, L). Each drop
/// owns an mt19937_64 stream whose seed is derived from (seed, index) with
/// splitmix64, so drops can be generated in any order.
double drop_position(std::uint64_t seed, std::size_t index,
                     double waveguide_length);

/// Precomputed pieces of |h|^2 = eta * 2Ps * D(phi) / r for a fixed PA
/// geometry; only x_p and the UE position vary per evaluation.
class ChannelEvaluator {
 public:
  ChannelEvaluator(const PassConfiguration& cfg,
                   const CouplingSolution& coupling,
                   const FarFieldPattern& pattern);

  double gain(double pa_position, Point2 ue, PatternModel model) const;

  const FarFieldPattern& pattern() const { return *pattern_; }

 private:
  double scale_;  // eta * 2Ps
  const FarFieldPattern* pattern_;
};

/// Grid search for the x_p maximizing R under `model`; ties go to the
/// smaller x_p. Throws ConfigError on an empty grid.
double optimize_placement(const ChannelEvaluator& evaluator, Point2 ue,
                          PatternModel model, std::span<const double> grid);

struct SchemeResult {
  Scheme scheme = Scheme::fixed_antenna;
  std::vector<double> snr_db;
  std::vector<double> mean_rate;  // [bit/s/Hz] (or nat with LogBase::natural)
  std::vector<double> positions;  // chosen x_p per drop
  std::vector<double> gains;      // |h|^2 per drop, directional evaluation
};

struct PlanResult {
  SimulationPlan plan;
  double kappa = 0.0;
  double pa_length = 0.0;
  std::vector<double> ue_positions;
  std::array<SchemeResult, 3> schemes;

  const SchemeResult& scheme(Scheme s) const;
};

/// Mean of log(1 + g * snr) over drops with snr given in dB.
double mean_rate(std::span<const double> gains, double snr_db, LogBase base);

/// Horizontal distance [dB] between two rate curves: the extra transmit SNR
/// `lower` needs to match the mean rate `upper` reaches at `snr_db`.
double snr_gap_db(const SchemeResult& upper, const SchemeResult& lower,
                  double snr_db, LogBase base = LogBase::two);

/// Runs the Monte-Carlo placement study. `pa` supplies the slabs and PA
/// length; its x_p and L are replaced by the plan. Every scheme is scored
/// with the directional closed-form channel.
PlanResult run_plan(const SimulationPlan& plan, const PassConfiguration& pa);

}  // namespace pass
