#pragma once

// Batch commands behind the passim CLI. Each command has a compute step that
// returns plain data and a write step that exports it; the CLI only parses
// flags, calls both, and maps exceptions onto exit codes.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pass/deployment_sim.hpp"
#include "pass/far_field.hpp"
#include "pass/io/scenario.hpp"
#include "pass/slab_modes.hpp"

namespace pass::io {

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view name);

struct SlabReport {
  std::string name;
  SlabGeometry geometry;
  ModeSolution mode;
};

struct ModesReport {
  std::vector<SlabReport> slabs;
  bool single_mode = true;
  bool phase_matched = true;
  double kappa = 0.0;
  double coupling_length = 0.0;
};

ModesReport compute_modes(const Scenario& scenario);
std::string format_modes(const ModesReport& report);
std::filesystem::path write_modes(const ModesReport& report,
                                  const Scenario& scenario,
                                  const std::filesystem::path& dir,
                                  OutputFormat format);

struct PatternRun {
  double length_lambda = 0.0;
  double kappa = 0.0;
  FarFieldPattern pattern;
  std::optional<FarFieldPattern> oracle;
  std::optional<double> oracle_deviation;
};

std::vector<PatternRun> compute_patterns(const Scenario& scenario,
                                         std::span<const double> lengths_lambda,
                                         bool with_oracle);
std::vector<std::filesystem::path> write_patterns(
    std::span<const PatternRun> runs, const Scenario& scenario,
    const std::filesystem::path& dir, OutputFormat format);

struct CouplingSweepRow {
  double length_m = 0.0;
  double pair_fraction = 0.0;    // 2 Ps
  double single_fraction = 0.0;  // reference single-PA model
  double main_fraction = 0.0;    // Pm
};

struct CouplingSweep {
  double kappa = 0.0;
  double coupling_length = 0.0;         // pair
  double single_coupling_length = 0.0;  // pi / (2 kappa)
  std::vector<CouplingSweepRow> rows;
};

CouplingSweep compute_coupling_sweep(const Scenario& scenario,
                                     double max_length_lambda,
                                     std::size_t steps);
std::filesystem::path write_coupling_sweep(const CouplingSweep& sweep,
                                           const Scenario& scenario,
                                           const std::filesystem::path& dir,
                                           OutputFormat format);

PlanResult compute_linksim(const Scenario& scenario);
std::vector<std::filesystem::path> write_linksim(
    const PlanResult& result, const Scenario& scenario,
    const std::filesystem::path& dir, OutputFormat format);

}  // namespace pass::io
