#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "pass/deployment_sim.hpp"
#include "pass/errors.hpp"
#include "support/fixtures.hpp"

using namespace pass;

namespace {

SimulationPlan small_plan(std::size_t drops = 300, double grid = 0.05) {
  SimulationPlan plan;
  plan.num_drops = drops;
  plan.grid_resolution = grid;
  plan.seed = 11;
  return plan;
}

const PassConfiguration& base_config() {
  static const PassConfiguration cfg = pass::testing::baseline_config();
  return cfg;
}

}  // namespace

TEST_CASE("placement grid") {
  const double ls = 0.01;
  const auto grid = placement_grid(40.0, ls, 0.01);
  CHECK(grid.size() == 4000);
  CHECK(grid.front() == 0.5 * ls);
  CHECK(grid.back() <= 40.0 - 0.5 * ls);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(placement_grid(0.005, 0.01, 0.01).empty());
  CHECK(placement_grid(40.0, ls, 0.0).empty());
}

TEST_CASE("drop positions") {
  std::set<double> seen;
  for (std::size_t i = 0; i < 1000; ++i) {
    const double x = drop_position(1, i, 40.0);
    CHECK(x >= 0.0);
    CHECK(x < 40.0);
    seen.insert(x);
    CHECK(drop_position(1, i, 40.0) == x);
  }
  CHECK(seen.size() == 1000);
  CHECK(drop_position(2, 0, 40.0) != drop_position(1, 0, 40.0));
  double mean = 0.0;
  for (std::size_t i = 0; i < 20000; ++i) mean += drop_position(5, i, 1.0);
  CHECK(mean / 20000.0 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("omni optimum sits at the grid point nearest the UE") {
  const CouplingSolution c = solve_coupling(base_config());
  const FarFieldPattern p = compute_pattern(base_config(), c.kappa);
  const ChannelEvaluator eval(base_config(), c, p);
  const auto grid = placement_grid(40.0, base_config().pa_length, 0.01);
  for (double x_ue : {0.0, 0.001, 7.3333, 20.0, 39.999}) {
    const double best = optimize_placement(eval, {x_ue, -5.0}, PatternModel::omni, grid);
    const auto nearest = *std::min_element(grid.begin(), grid.end(), [&](double a, double b) {
      return std::abs(a - x_ue) < std::abs(b - x_ue);
    });
    CAPTURE(x_ue);
    CHECK(best == doctest::Approx(nearest).epsilon(1e-12));
  }
  CHECK_THROWS_AS(optimize_placement(eval, {1.0, -5.0}, PatternModel::omni, {}), ConfigError);
}

TEST_CASE("directional optimum leads the UE along the guide") {
  const CouplingSolution c = solve_coupling(base_config());
  const FarFieldPattern p = compute_pattern(base_config(), c.kappa);
  const ChannelEvaluator eval(base_config(), c, p);
  const auto grid = placement_grid(40.0, base_config().pa_length, 0.01);
  const double best = optimize_placement(eval, {20.0, -5.0}, PatternModel::directional, grid);
  // The main lobe points forward (phi in (3pi/2, 2pi) below the guide), so
  // the PA sits upstream of the UE.
  CHECK(best < 20.0);
  const double g_best = eval.gain(best, {20.0, -5.0}, PatternModel::directional);
  for (double x : grid) {
    CHECK(eval.gain(x, {20.0, -5.0}, PatternModel::directional) <= g_best);
  }
}

TEST_CASE("plan validation") {
  SimulationPlan plan = small_plan();
  CHECK_NOTHROW(plan.validate());
  plan.num_drops = 0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = small_plan();
  plan.snr_db = {90.0, 60.0};
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = small_plan();
  plan.grid_resolution = -1.0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = small_plan();
  plan.snr_db.clear();
  CHECK_THROWS_AS(run_plan(plan, base_config()), ConfigError);
}

TEST_CASE("Monte-Carlo plan") {
  const PlanResult r = run_plan(small_plan(), base_config());
  const SchemeResult& fixed = r.scheme(Scheme::fixed_antenna);
  const SchemeResult& omni = r.scheme(Scheme::omni_optimized);
  const SchemeResult& dir = r.scheme(Scheme::directional_optimized);

  SUBCASE("per-drop dominance of the directional optimum") {
    for (std::size_t i = 0; i < r.ue_positions.size(); ++i) {
      CHECK(dir.gains[i] >= omni.gains[i]);
      CHECK(fixed.positions[i] == 20.0);
    }
  }
  SUBCASE("ordering of mean rates at every SNR") {
    for (std::size_t k = 0; k < dir.snr_db.size(); ++k) {
      CHECK(dir.mean_rate[k] >= omni.mean_rate[k]);
      CHECK(omni.mean_rate[k] > fixed.mean_rate[k]);
      if (k > 0) CHECK(dir.mean_rate[k] > dir.mean_rate[k - 1]);
    }
  }
  SUBCASE("SNR gap") {
    const double gap = snr_gap_db(dir, omni, 90.0);
    CHECK(gap > 3.0);
    CHECK(gap < 6.0);
    CHECK(snr_gap_db(dir, dir, 90.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
  }
  SUBCASE("natural log differs from log2 by ln 2") {
    SimulationPlan plan = small_plan(50);
    plan.log_base = LogBase::natural;
    const PlanResult nat = run_plan(plan, base_config());
    const PlanResult two = run_plan(small_plan(50), base_config());
    CHECK(nat.scheme(Scheme::omni_optimized).mean_rate[3] ==
          doctest::Approx(two.scheme(Scheme::omni_optimized).mean_rate[3] * std::log(2.0)));
  }
}

TEST_CASE("determinism and thread invariance") {
  SimulationPlan a = small_plan(120);
  a.threads = 1;
  SimulationPlan b = a;
  b.threads = 4;
  const PlanResult ra = run_plan(a, base_config());
  const PlanResult rb = run_plan(b, base_config());
  const PlanResult rc = run_plan(a, base_config());
  CHECK(ra.ue_positions == rb.ue_positions);
  for (std::size_t s = 0; s < 3; ++s) {
    CHECK(ra.schemes[s].gains == rb.schemes[s].gains);
    CHECK(ra.schemes[s].mean_rate == rb.schemes[s].mean_rate);
    CHECK(ra.schemes[s].mean_rate == rc.schemes[s].mean_rate);
  }
  SimulationPlan other = a;
  other.seed = 12;
  CHECK(run_plan(other, base_config()).ue_positions != ra.ue_positions);
}

TEST_CASE("convergence") {
  SUBCASE("grid refinement") {
    const PlanResult coarse = run_plan(small_plan(200, 0.02), base_config());
    const PlanResult fine = run_plan(small_plan(200, 0.01), base_config());
    for (Scheme s : {Scheme::omni_optimized, Scheme::directional_optimized}) {
      const double a = coarse.scheme(s).mean_rate[6];
      const double b = fine.scheme(s).mean_rate[6];
      CHECK(std::abs(a - b) / b < 0.005);
    }
  }
  SUBCASE("doubling the drops") {
    const PlanResult n1 = run_plan(small_plan(1000, 0.05), base_config());
    const PlanResult n2 = run_plan(small_plan(2000, 0.05), base_config());
    for (Scheme s : kAllSchemes) {
      const double a = n1.scheme(s).mean_rate[6];
      const double b = n2.scheme(s).mean_rate[6];
      CHECK(std::abs(a - b) / b < 0.02);
    }
  }
}

TEST_CASE("fixed position override") {
  SimulationPlan plan = small_plan(20);
  plan.fixed_position = 5.0;
  const PlanResult r = run_plan(plan, base_config());
  CHECK(r.scheme(Scheme::fixed_antenna).positions[0] == 5.0);
  plan.fixed_position = 40.0;
  CHECK_THROWS_AS(run_plan(plan, base_config()), ConfigError);
}

TEST_CASE("scheme names") {
  CHECK(to_string(Scheme::fixed_antenna) == "fixed_antenna");
  CHECK(to_string(Scheme::directional_optimized) == "directional_optimized");
  const auto g = default_snr_grid_db();
  CHECK(g.size() == 13);
  CHECK(g.front() == 60.0);
  CHECK(g.back() == 120.0);
}
