#include "pass/deployment_sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "pass/errors.hpp"

namespace pass {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double rate_from_db(double gain, double snr_db, LogBase base) {
  return spectral_efficiency(gain, std::pow(10.0, snr_db / 10.0), base);
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::fixed_antenna:
      return "fixed_antenna";
    case Scheme::omni_optimized:
      return "omni_optimized";
    case Scheme::directional_optimized:
      return "directional_optimized";
  }
  return "unknown";
}

std::vector<double> default_snr_grid_db() {
  std::vector<double> g;
  for (int s = 60; s <= 120; s += 5) g.push_back(s);
  return g;
}

void SimulationPlan::validate() const {
  if (!(waveguide_length > 0.0)) throw ConfigError("L must be positive");
  if (!(ue_height > 0.0)) throw ConfigError("UE height must be positive");
  if (num_drops < 1) throw ConfigError("num_drops must be >= 1");
  if (snr_db.empty()) throw ConfigError("SNR grid is empty");
  if (!std::is_sorted(snr_db.begin(), snr_db.end())) {
    throw ConfigError("SNR grid must be ascending");
  }
  if (!(grid_resolution > 0.0)) {
    throw ConfigError("placement grid resolution must be positive");
  }
}

std::vector<double> placement_grid(double waveguide_length, double pa_length,
                                   double resolution) {
  std::vector<double> grid;
  const double lo = 0.5 * pa_length;
  const double hi = waveguide_length - 0.5 * pa_length;
  if (!(resolution > 0.0) || hi < lo) return grid;
  const auto n =
      static_cast<std::size_t>(std::floor((hi - lo) / resolution + 1e-9)) + 1;
  grid.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid.push_back(std::min(lo + resolution * static_cast<double>(k), hi));
  }
  return grid;
}

double drop_position(std::uint64_t seed, std::size_t index,
                     double waveguide_length) {
  std::mt19937_64 gen(splitmix64(seed ^ splitmix64(index)));
  // 53 random mantissa bits; avoids the implementation-defined
  // uniform_real_distribution.
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return u * waveguide_length;
}

ChannelEvaluator::ChannelEvaluator(const PassConfiguration& cfg,
                                   const CouplingSolution& coupling,
                                   const FarFieldPattern& pattern)
    : scale_(path_loss_constant(cfg.main.frequency) *
             coupled_powers(coupling.kappa, cfg.pa_length).pair()),
      pattern_(&pattern) {}

double ChannelEvaluator::gain(double pa_position, Point2 ue,
                              PatternModel model) const {
  const double dx = ue.x - pa_position;
  const double r = std::hypot(dx, ue.y);
  if (!(r > 0.0)) throw DegenerateError("UE coincides with the PA centre");
  const double d = model == PatternModel::omni
                       ? 1.0
                       : pattern_->directivity_at(std::atan2(ue.y, dx));
  return scale_ * d / r;
}

double optimize_placement(const ChannelEvaluator& evaluator, Point2 ue,
                          PatternModel model, std::span<const double> grid) {
  if (grid.empty()) throw ConfigError("placement grid is empty");
  double best_x = grid.front();
  double best = evaluator.gain(best_x, ue, model);
  for (double x : grid.subspan(1)) {
    const double g = evaluator.gain(x, ue, model);
    if (g > best) {
      best = g;
      best_x = x;
    }
  }
  return best_x;
}

const SchemeResult& PlanResult::scheme(Scheme s) const {
  return schemes[static_cast<std::size_t>(s)];
}

double mean_rate(std::span<const double> gains, double snr_db, LogBase base) {
  double sum = 0.0;
  for (double g : gains) sum += rate_from_db(g, snr_db, base);
  return sum / static_cast<double>(gains.size());
}

double snr_gap_db(const SchemeResult& upper, const SchemeResult& lower,
                  double snr_db, LogBase base) {
  const double target = mean_rate(upper.gains, snr_db, base);
  double lo = snr_db - 200.0;
  double hi = snr_db + 200.0;
  if (mean_rate(lower.gains, hi, base) < target ||
      mean_rate(lower.gains, lo, base) > target) {
    throw DegenerateError("rate curves do not cross within +-200 dB");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mean_rate(lower.gains, mid, base) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) - snr_db;
}

PlanResult run_plan(const SimulationPlan& plan, const PassConfiguration& pa) {
  plan.validate();
  const double length = plan.waveguide_length;
  const double fixed_x = plan.fixed_position.value_or(0.5 * length);
  const PassConfiguration cfg =
      PassConfiguration::make(pa.main, pa.pa, pa.pa_length, fixed_x, length,
                              pa.input_amplitude);
  const CouplingSolution coupling = solve_coupling(cfg);
  const FarFieldPattern pattern = compute_pattern(cfg, coupling.kappa);
  const ChannelEvaluator evaluator(cfg, coupling, pattern);
  const std::vector<double> grid =
      placement_grid(length, cfg.pa_length, plan.grid_resolution);
  if (grid.empty()) throw ConfigError("placement grid is empty");

  PlanResult out;
  out.plan = plan;
  out.kappa = coupling.kappa;
  out.pa_length = cfg.pa_length;
  const std::size_t n = plan.num_drops;
  out.ue_positions.resize(n);
  for (std::size_t s = 0; s < kAllSchemes.size(); ++s) {
    out.schemes[s].scheme = kAllSchemes[s];
    out.schemes[s].snr_db = plan.snr_db;
    out.schemes[s].positions.resize(n);
    out.schemes[s].gains.resize(n);
  }

  auto process = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double x_ue = drop_position(plan.seed, i, length);
      const Point2 ue{x_ue, -plan.ue_height};
      out.ue_positions[i] = x_ue;
      const std::array<double, 3> chosen = {
          fixed_x,
          optimize_placement(evaluator, ue, PatternModel::omni, grid),
          optimize_placement(evaluator, ue, PatternModel::directional, grid)};
      for (std::size_t s = 0; s < chosen.size(); ++s) {
        out.schemes[s].positions[i] = chosen[s];
        out.schemes[s].gains[i] =
            evaluator.gain(chosen[s], ue, PatternModel::directional);
      }
    }
  };

  std::size_t threads = plan.threads != 0
                            ? plan.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    process(0, n);
  } else {
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::exception_ptr> errors((n + chunk - 1) / chunk);
    {
      std::vector<std::jthread> pool;
      for (std::size_t b = 0, t = 0; b < n; b += chunk, ++t) {
        pool.emplace_back([&, b, t] {
          try {
            process(b, std::min(n, b + chunk));
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (SchemeResult& r : out.schemes) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(r.gains[i])) {
        throw DegenerateError("non-finite channel gain for scheme " +
                              std::string(to_string(r.scheme)) + " at drop " +
                              std::to_string(i) + " (x_ue = " +
                              std::to_string(out.ue_positions[i]) + " m)");
      }
    }
    r.mean_rate.reserve(plan.snr_db.size());
    for (double snr : plan.snr_db) {
      r.mean_rate.push_back(mean_rate(r.gains, snr, plan.log_base));
    }
  }
  return out;
}

}  // namespace pass
