// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   pass_acceptance                 run all criteria
//   pass_acceptance --criterion N   run criterion N only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pass/constants.hpp"
#include "pass/deployment_sim.hpp"
#include "pass/far_field.hpp"
#include "pass/io/commands.hpp"
#include "pass/io/csv.hpp"
#include "pass/io/scenario.hpp"
#include "pass/mode_coupling.hpp"
#include "pass/slab_modes.hpp"
#include "support/fixtures.hpp"

using namespace pass;
namespace fx = pass::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<double> kLengths = {0.75, 1.5, 2.0, 2.5};

Outcome mode_identities() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> vdist(0.3, 1.55);
  std::uniform_real_distribution<double> fdist(10e9, 300e9);
  std::uniform_real_distribution<double> n0dist(1.0, 1.5);
  std::uniform_real_distribution<double> dndist(0.05, 1.5);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double n0 = n0dist(rng);
    const double n1 = n0 + dndist(rng);
    const double f = fdist(rng);
    const SlabGeometry g{width_for_v(n1, n0, f, vdist(rng)), n1, n0, f};
    const ModeSolution m = solve_te0(g);
    const double k = g.wavenumber();
    const double half = 0.5 * g.width;
    worst = std::max({worst,
                      std::abs(m.u * std::tan(m.u) - m.w),
                      std::abs(m.u * m.u + m.w * m.w - m.v_number * m.v_number),
                      std::abs(m.beta_x * m.beta_x + m.beta_y * m.beta_y -
                               k * k * n1 * n1) / (k * k * n1 * n1),
                      std::abs(m.beta_x * m.beta_x - m.sigma * m.sigma -
                               k * k * n0 * n0) / (k * k * n0 * n0),
                      std::abs(m.beta_y * half - m.u),
                      std::abs(m.sigma * half - m.w)});
  }
  const double lambda = fx::slab_for_v(1.0).wavelength();
  const double w135 = width_for_v(fx::kN1, fx::kN0, fx::kF0, 1.35) / lambda;
  const double w155 = width_for_v(fx::kN1, fx::kN0, fx::kF0, 1.55) / lambda;
  const double v408 = normalized_frequency({0.408 * lambda, fx::kN1, fx::kN0, fx::kF0});
  const double v470 = normalized_frequency({0.470 * lambda, fx::kN1, fx::kN0, fx::kF0});
  const double trip = std::max({std::abs(w135 - 0.408) / 0.408,
                                std::abs(w155 - 0.470) / 0.470,
                                std::abs(v408 - 1.35) / 1.35,
                                std::abs(v470 - 1.55) / 1.55});
  return {worst < 1e-10 && trip < 0.01,
          fmt("max residual %.2e, width/V round-trip error %.3f%% "
              "(V=1.35 -> %.4f lambda, V=1.55 -> %.4f lambda)",
              worst, 100.0 * trip, w135, w155)};
}

Outcome coupling_oracle() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> vdist(0.3, 1.55);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PassConfiguration cfg = fx::baseline_config(vdist(rng));
    const double closed = coupling_coefficient(cfg);
    const double oracle = fx::oracle_kappa_main_to_pa(cfg);
    worst = std::max(worst, std::abs(closed - oracle) / oracle);
  }
  return {worst < 1e-6, fmt("max relative deviation %.2e over 20 geometries", worst)};
}

Outcome coupling_length_check() {
  const CouplingSolution c = solve_coupling(fx::baseline_config());
  const double mm = c.coupling_length * 1e3;
  return {mm >= 8.5 && mm <= 11.5,
          fmt("kappa = %.4f rad/m, Lc = %.4f mm", c.kappa, mm)};
}

Outcome power_conservation() {
  const double kappa = coupling_coefficient(fx::baseline_config());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0.0, 50.0 * coupling_length(kappa));
  double worst = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const CoupledPowers p = coupled_powers(kappa, x(rng));
    worst = std::max(worst, std::abs(p.main + 2.0 * p.per_pa - 1.0));
  }
  return {worst <= 1e-15, fmt("max |Pm + 2Ps - 1| = %.2e", worst)};
}

Outcome pattern_oracle() {
  const double lambda = fx::baseline_wavelength();
  struct Geometry {
    double v;
    double ls;
  };
  std::vector<Geometry> cases;
  for (double ls : kLengths) cases.push_back({1.5, ls});
  for (double w : {0.408, 0.470}) {
    cases.push_back({normalized_frequency({w * lambda, fx::kN1, fx::kN0, fx::kF0}), 2.0});
  }
  const std::vector<double> grid = uniform_angle_grid(720);
  double worst = 0.0;
  for (const auto& c : cases) {
    const PassConfiguration cfg = fx::baseline_config(c.v, c.ls);
    const double kappa = coupling_coefficient(cfg);
    std::vector<Complex> closed(grid.size());
    std::transform(grid.begin(), grid.end(), closed.begin(),
                   [&](double phi) { return total_pattern(cfg, kappa, phi); });
    const auto oracle = oracle_pattern(cfg, kappa, grid);
    worst = std::max(worst, max_magnitude_deviation(closed, oracle));
  }
  return {worst < 1e-6,
          fmt("max deviation %.2e over %zu configurations x 720 angles", worst,
              cases.size())};
}

Outcome pattern_structure() {
  bool nulls = true;
  double asym = 0.0;
  bool lobe_monotone = true;
  bool peak_monotone = true;
  std::ostringstream table;
  double prev_lobe = constants::kPi;
  double prev_peak = 0.0;
  for (double ls : kLengths) {
    const PassConfiguration cfg = fx::baseline_config(1.5, ls);
    const FarFieldPattern p = compute_pattern(cfg, coupling_coefficient(cfg));
    const std::size_t n = p.angles.size();
    nulls = nulls && p.power_pattern[0] == 0.0 && p.angles[n / 2] == constants::kPi &&
            p.power_pattern[n / 2] == 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      asym = std::max(asym, std::abs(p.power_pattern[k] - p.power_pattern[n - k]));
    }
    const double lobe = p.main_lobe_angle();
    const double peak = p.peak_directivity();
    lobe_monotone = lobe_monotone && lobe < prev_lobe;
    peak_monotone = peak_monotone && peak > prev_peak;
    prev_lobe = lobe;
    prev_peak = peak;
    table << fmt(" %.2fL:(%.2fdeg, D=%.3f)", ls, lobe * 180.0 / constants::kPi, peak);
  }
  const bool ok = nulls && asym < 1e-10 && lobe_monotone && peak_monotone;
  return {ok, fmt("nulls %s, asymmetry %.1e, lobe monotone %s, peak D monotone %s;",
                  nulls ? "ok" : "bad", asym, lobe_monotone ? "yes" : "no",
                  peak_monotone ? "yes" : "no") +
                  table.str()};
}

Outcome directivity_normalization() {
  double worst = 0.0;
  std::size_t count = 0;
  const double lambda = fx::baseline_wavelength();
  for (ApertureModel model : {ApertureModel::offset,
                              ApertureModel::centered_offset,
                              ApertureModel::physical_core}) {
    for (double v : {1.5, normalized_frequency({0.408 * lambda, fx::kN1, fx::kN0, fx::kF0}),
                     normalized_frequency({0.470 * lambda, fx::kN1, fx::kN0, fx::kF0})}) {
      for (double ls : kLengths) {
        const PassConfiguration cfg = fx::baseline_config(v, ls);
        for (std::size_t samples : {360u, 1440u, 5760u}) {
          const FarFieldPattern p =
              compute_pattern(cfg, coupling_coefficient(cfg), samples, model);
          worst = std::max(worst, std::abs(p.mean_directivity() - 1.0));
          ++count;
        }
      }
    }
  }
  return {worst <= 1e-10, fmt("max |mean D - 1| = %.2e over %zu patterns", worst, count)};
}

Outcome link_simulation() {
  SimulationPlan plan;  // 10^4 drops, 1 cm grid, seed 1
  const PlanResult r = run_plan(plan, fx::baseline_config());
  const SchemeResult& fixed = r.scheme(Scheme::fixed_antenna);
  const SchemeResult& omni = r.scheme(Scheme::omni_optimized);
  const SchemeResult& dir = r.scheme(Scheme::directional_optimized);
  bool ordered = true;
  for (std::size_t k = 0; k < plan.snr_db.size(); ++k) {
    ordered = ordered && dir.mean_rate[k] >= omni.mean_rate[k] &&
              omni.mean_rate[k] >= fixed.mean_rate[k];
  }
  std::size_t dominated = 0;
  for (std::size_t i = 0; i < plan.num_drops; ++i) {
    if (dir.gains[i] >= omni.gains[i]) ++dominated;
  }
  const double mid = plan.snr_db[plan.snr_db.size() / 2];
  const double gap = snr_gap_db(dir, omni, mid);
  const std::size_t m = plan.snr_db.size() / 2;
  return {ordered && gap >= 3.0 && dominated == plan.num_drops,
          fmt("ordering %s, gap %.2f dB at %.0f dB, dominance %zu/%zu; "
              "R(%.0f dB) = %.3f / %.3f / %.3f",
              ordered ? "holds" : "violated", gap, mid, dominated, plan.num_drops,
              mid, dir.mean_rate[m], omni.mean_rate[m], fixed.mean_rate[m])};
}

Outcome determinism() {
  io::Scenario s;
  s.drops = 500;
  s.seed = 17;
  s.trace = true;
  std::vector<std::string> runs[2];
  for (auto& run : runs) {
    const PlanResult r = io::compute_linksim(s);
    std::ostringstream summary;
    std::ostringstream trace;
    // Same serialisation the CLI uses, written to a scratch directory.
    const auto dir = std::filesystem::temp_directory_path() /
                     ("pass_acceptance_" + std::to_string(&run - runs));
    std::filesystem::create_directories(dir);
    for (const auto& path : io::write_linksim(r, s, dir, io::OutputFormat::csv)) {
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      run.push_back(io::data_section(buf.str()));
    }
    std::filesystem::remove_all(dir);
  }
  const bool same = runs[0] == runs[1] && !runs[0].empty();
  std::size_t bytes = 0;
  for (const auto& d : runs[0]) bytes += d.size();
  return {same, fmt("%zu files, %zu data bytes, identical: %s", runs[0].size(), bytes,
                    same ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "mode-solver identities", 1.0, mode_identities},
      {2, "coupling coefficient vs quadrature", 10.0, coupling_oracle},
      {3, "coupling length", 1.0, coupling_length_check},
      {4, "power conservation", 1.0, power_conservation},
      {5, "pattern vs aperture-integral oracle", 30.0, pattern_oracle},
      {6, "pattern structure", 10.0, pattern_structure},
      {7, "directivity normalization", 1.0, directivity_normalization},
      {8, "link simulation", 300.0, link_simulation},
      {9, "linksim determinism", 5.0, determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only != 0 && (only < 1 || only > 9)) {
    std::fprintf(stderr, "criterion must be 1..9\n");
    return 2;
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= c.budget_s;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d (%s): %s [%.2f s%s]\n", ok ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str(), dt, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
