#pragma once

// Scenario files: a flat, sectioned key-value document (INI-like) or the
// equivalent JSON object. Physical values carry their unit in the key name
// (f_ghz, width_mm, position_m, grid_cm, snr_db) and are converted to SI by
// the accessors below.
//
//   [waveguide]  f_ghz, n1, n0, width_mm | v_number
//   [pa]         length_lambda, position_m, width_mm | v_number
//   [simulation] L_m, ue_height_m, drops, seed, snr_db, grid_cm,
//                transmit_power_w, log_base, fixed_position_m
//   [pattern]    samples, aperture
//   [output]     directory, formats, trace

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pass/deployment_sim.hpp"
#include "pass/far_field.hpp"
#include "pass/link_model.hpp"
#include "pass/mode_coupling.hpp"
#include "pass/slab_modes.hpp"

namespace pass::io {

struct SlabSpec {
  std::optional<double> width_mm;
  std::optional<double> v_number;
};

struct Scenario {
  double frequency_ghz = 60.0;
  double n1 = 1.4491376746189439;  // sqrt(2.1)
  double n0 = 1.0;
  SlabSpec waveguide{std::nullopt, 1.5};
  SlabSpec pa;  // empty: identical to the waveguide

  double pa_length_lambda = 2.0;
  std::optional<double> pa_position_m;  // defaults to L/2

  double waveguide_length_m = 40.0;
  double ue_height_m = 5.0;
  std::size_t drops = 10000;
  std::uint64_t seed = 1;
  std::vector<double> snr_db = default_snr_grid_db();
  double grid_cm = 1.0;
  double transmit_power_w = 1.0;
  LogBase log_base = LogBase::two;
  std::optional<double> fixed_position_m;

  std::size_t pattern_samples = kDefaultAngleSamples;
  ApertureModel aperture = ApertureModel::offset;

  std::string output_directory = ".";
  std::vector<std::string> formats{"csv"};
  bool trace = false;
};

Scenario parse_ini(std::string_view text);
Scenario parse_json(std::string_view text);

/// Dispatches on the extension: .json is JSON, anything else INI.
Scenario load_scenario(const std::filesystem::path& path);

/// Field-level checks; throws ConfigError / MultimodeError.
void validate(const Scenario& scenario);

/// Resolved configuration (after defaulting) plus derived SI quantities.
std::string to_json(const Scenario& scenario, int indent = -1);

double wavelength(const Scenario& scenario);
SlabGeometry waveguide_slab(const Scenario& scenario);
SlabGeometry pa_slab(const Scenario& scenario);

/// PassConfiguration at the scenario's PA position (default L/2).
PassConfiguration configuration(const Scenario& scenario, double pa_length_m);

SimulationPlan simulation_plan(const Scenario& scenario);

std::string_view to_string(ApertureModel model);
ApertureModel parse_aperture(std::string_view name);

}  // namespace pass::io
