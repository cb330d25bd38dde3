#include "pass/io/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "pass/constants.hpp"
#include "pass/errors.hpp"
#include "pass/io/csv.hpp"
#include "pass/mode_coupling.hpp"

namespace pass::io {

namespace {

using nlohmann::json;

constexpr double kRadToDeg = 180.0 / constants::kPi;

std::ofstream open_output(const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

json config_with(const Scenario& scenario, const json& command) {
  json j = json::parse(to_json(scenario));
  j["command"] = command;
  return j;
}

std::int64_t generated_at() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// "0.75" -> "0.75", "2" -> "2"; used in file names.
std::string length_tag(double length_lambda) {
  std::ostringstream s;
  s << std::setprecision(6) << length_lambda;
  return s.str();
}

void write_pattern_csv(std::ostream& out, const FarFieldPattern& p,
                       const json& config, std::string_view kind) {
  write_provenance(out, kind, config.dump());
  out << "phi_deg,re_F,im_F,G,D\n";
  for (std::size_t k = 0; k < p.angles.size(); ++k) {
    out << format_double(p.angles[k] * kRadToDeg) << ','
        << format_double(p.complex_pattern[k].real()) << ','
        << format_double(p.complex_pattern[k].imag()) << ','
        << format_double(p.power_pattern[k]) << ','
        << format_double(p.directivity[k]) << '\n';
  }
}

json pattern_json(const FarFieldPattern& p) {
  json j;
  std::vector<double> deg(p.angles.size()), re(p.angles.size()),
      im(p.angles.size());
  for (std::size_t k = 0; k < p.angles.size(); ++k) {
    deg[k] = p.angles[k] * kRadToDeg;
    re[k] = p.complex_pattern[k].real();
    im[k] = p.complex_pattern[k].imag();
  }
  j["phi_deg"] = deg;
  j["re_F"] = re;
  j["im_F"] = im;
  j["G"] = p.power_pattern;
  j["D"] = p.directivity;
  j["peak_directivity"] = p.peak_directivity();
  j["main_lobe_deg"] = p.main_lobe_angle() * kRadToDeg;
  return j;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("--format: expected csv or json, got '" +
                    std::string(name) + "'");
}

ModesReport compute_modes(const Scenario& scenario) {
  validate(scenario);
  ModesReport r;
  const SlabGeometry main = waveguide_slab(scenario);
  const SlabGeometry pa = pa_slab(scenario);
  r.slabs.push_back({"waveguide", main, solve_te0(main)});
  r.slabs.push_back({"pa", pa, solve_te0(pa)});
  for (const auto& s : r.slabs) {
    r.single_mode = r.single_mode && s.mode.v_number < constants::kPi / 2.0;
  }
  const PassConfiguration cfg =
      configuration(scenario, scenario.pa_length_lambda * main.wavelength());
  r.phase_matched = cfg.phase_matched();
  r.kappa = coupling_coefficient(cfg);
  r.coupling_length = coupling_length(r.kappa);
  return r;
}

std::string format_modes(const ModesReport& report) {
  std::ostringstream out;
  out << std::setprecision(10);
  for (const auto& s : report.slabs) {
    out << s.name << ": W = " << s.geometry.width * 1e3 << " mm"
        << ", V = " << s.mode.v_number << ", u = " << s.mode.u
        << ", w = " << s.mode.w << '\n'
        << "  beta_x = " << s.mode.beta_x << " rad/m"
        << ", beta_y = " << s.mode.beta_y << " rad/m"
        << ", sigma = " << s.mode.sigma << " 1/m"
        << ", lambda_g = " << s.mode.guided_wavelength() * 1e3 << " mm\n";
  }
  out << "kappa = " << report.kappa << " rad/m, Lc = "
      << report.coupling_length * 1e3 << " mm\n";
  out << (report.single_mode ? "single-mode" : "MULTIMODE") << " PASS, "
      << (report.phase_matched ? "phase matched" : "not phase matched")
      << '\n';
  return out.str();
}

std::filesystem::path write_modes(const ModesReport& report,
                                  const Scenario& scenario,
                                  const std::filesystem::path& dir,
                                  OutputFormat format) {
  const json config = config_with(scenario, {{"name", "modes"}});
  if (format == OutputFormat::json) {
    const auto path = dir / "modes.json";
    json j;
    j["generated_at"] = generated_at();
    j["config"] = config;
    for (const auto& s : report.slabs) {
      j["slabs"].push_back({{"slab", s.name},
                            {"width_m", s.geometry.width},
                            {"v", s.mode.v_number},
                            {"u", s.mode.u},
                            {"w", s.mode.w},
                            {"beta_x", s.mode.beta_x},
                            {"beta_y", s.mode.beta_y},
                            {"sigma", s.mode.sigma},
                            {"lambda_g", s.mode.guided_wavelength()}});
    }
    j["kappa"] = report.kappa;
    j["coupling_length_m"] = report.coupling_length;
    j["single_mode"] = report.single_mode;
    open_output(path) << j.dump(2) << '\n';
    return path;
  }
  const auto path = dir / "modes.csv";
  auto out = open_output(path);
  write_provenance(out, "modes", config.dump());
  out << "slab,width_m,v,u,w,beta_x,beta_y,sigma,lambda_g,kappa,"
         "coupling_length_m\n";
  for (const auto& s : report.slabs) {
    out << s.name << ',' << format_double(s.geometry.width) << ','
        << format_double(s.mode.v_number) << ',' << format_double(s.mode.u)
        << ',' << format_double(s.mode.w) << ','
        << format_double(s.mode.beta_x) << ','
        << format_double(s.mode.beta_y) << ','
        << format_double(s.mode.sigma) << ','
        << format_double(s.mode.guided_wavelength()) << ','
        << format_double(report.kappa) << ','
        << format_double(report.coupling_length) << '\n';
  }
  return path;
}

std::vector<PatternRun> compute_patterns(const Scenario& scenario,
                                         std::span<const double> lengths_lambda,
                                         bool with_oracle) {
  validate(scenario);
  const double lambda = wavelength(scenario);
  std::vector<PatternRun> runs;
  for (double ls : lengths_lambda) {
    if (!(ls > 0.0)) throw ConfigError("--lengths entries must be positive");
    const PassConfiguration cfg = configuration(scenario, ls * lambda);
    const CouplingSolution coupling = solve_coupling(cfg);
    PatternRun run;
    run.length_lambda = ls;
    run.kappa = coupling.kappa;
    run.pattern = compute_pattern(cfg, coupling.kappa,
                                  scenario.pattern_samples, scenario.aperture);
    if (with_oracle) {
      OracleOptions opt;
      opt.aperture = scenario.aperture;
      auto f = oracle_pattern(cfg, coupling.kappa, run.pattern.angles, opt);
      run.oracle_deviation =
          max_magnitude_deviation(run.pattern.complex_pattern, f);
      run.oracle = make_pattern(run.pattern.angles, std::move(f));
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

std::vector<std::filesystem::path> write_patterns(
    std::span<const PatternRun> runs, const Scenario& scenario,
    const std::filesystem::path& dir, OutputFormat format) {
  std::vector<std::filesystem::path> written;
  for (const auto& run : runs) {
    json command = {{"name", "pattern"},
                    {"length_lambda", run.length_lambda},
                    {"kappa", run.kappa},
                    {"oracle", run.oracle.has_value()}};
    if (run.oracle_deviation) {
      command["oracle_max_deviation"] = *run.oracle_deviation;
    }
    const json config = config_with(scenario, command);
    const std::string tag = length_tag(run.length_lambda);
    if (format == OutputFormat::json) {
      const auto path = dir / ("pattern_Ls" + tag + ".json");
      json j;
      j["generated_at"] = generated_at();
      j["config"] = config;
      j["pattern"] = pattern_json(run.pattern);
      if (run.oracle) j["oracle"] = pattern_json(*run.oracle);
      open_output(path) << j.dump() << '\n';
      written.push_back(path);
      continue;
    }
    const auto path = dir / ("pattern_Ls" + tag + ".csv");
    auto out = open_output(path);
    write_pattern_csv(out, run.pattern, config, "pattern");
    written.push_back(path);
    if (run.oracle) {
      const auto opath = dir / ("pattern_oracle_Ls" + tag + ".csv");
      auto oout = open_output(opath);
      write_pattern_csv(oout, *run.oracle, config, "pattern-oracle");
      written.push_back(opath);
    }
  }
  return written;
}

CouplingSweep compute_coupling_sweep(const Scenario& scenario,
                                     double max_length_lambda,
                                     std::size_t steps) {
  validate(scenario);
  if (!(max_length_lambda > 0.0)) {
    throw ConfigError("--max-length must be positive");
  }
  if (steps < 2) throw ConfigError("coupling sweep needs >= 2 steps");
  const double lambda = wavelength(scenario);
  const PassConfiguration cfg = configuration(scenario, 0.0);
  CouplingSweep sweep;
  sweep.kappa = coupling_coefficient(cfg);
  sweep.coupling_length = coupling_length(sweep.kappa);
  sweep.single_coupling_length = constants::kPi / (2.0 * sweep.kappa);
  const double max_len = max_length_lambda * lambda;
  for (std::size_t i = 0; i < steps; ++i) {
    const double ls =
        max_len * static_cast<double>(i) / static_cast<double>(steps - 1);
    const CoupledPowers p = coupled_powers(sweep.kappa, ls);
    sweep.rows.push_back(
        {ls, p.pair(), single_pa_coupled_power(sweep.kappa, ls), p.main});
  }
  return sweep;
}

std::filesystem::path write_coupling_sweep(const CouplingSweep& sweep,
                                           const Scenario& scenario,
                                           const std::filesystem::path& dir,
                                           OutputFormat format) {
  const json config = config_with(
      scenario, {{"name", "coupling-sweep"},
                 {"kappa", sweep.kappa},
                 {"coupling_length_m", sweep.coupling_length},
                 {"single_coupling_length_m", sweep.single_coupling_length}});
  const double lambda = wavelength(scenario);
  if (format == OutputFormat::json) {
    const auto path = dir / "coupling_sweep.json";
    json j;
    j["generated_at"] = generated_at();
    j["config"] = config;
    for (const auto& r : sweep.rows) {
      j["rows"].push_back({{"length_mm", r.length_m * 1e3},
                           {"length_lambda", r.length_m / lambda},
                           {"pair_coupled_pct", 100.0 * r.pair_fraction},
                           {"single_coupled_pct", 100.0 * r.single_fraction},
                           {"main_pct", 100.0 * r.main_fraction}});
    }
    open_output(path) << j.dump(2) << '\n';
    return path;
  }
  const auto path = dir / "coupling_sweep.csv";
  auto out = open_output(path);
  write_provenance(out, "coupling-sweep", config.dump());
  out << "length_mm,length_lambda,pair_coupled_pct,single_coupled_pct,"
         "main_pct\n";
  for (const auto& r : sweep.rows) {
    out << format_double(r.length_m * 1e3) << ','
        << format_double(r.length_m / lambda) << ','
        << format_double(100.0 * r.pair_fraction) << ','
        << format_double(100.0 * r.single_fraction) << ','
        << format_double(100.0 * r.main_fraction) << '\n';
  }
  return path;
}

PlanResult compute_linksim(const Scenario& scenario) {
  validate(scenario);
  const double lambda = wavelength(scenario);
  const PassConfiguration cfg =
      configuration(scenario, scenario.pa_length_lambda * lambda);
  return run_plan(simulation_plan(scenario), cfg);
}

std::vector<std::filesystem::path> write_linksim(
    const PlanResult& result, const Scenario& scenario,
    const std::filesystem::path& dir, OutputFormat format) {
  const json config = config_with(
      scenario, {{"name", "linksim"},
                 {"kappa", result.kappa},
                 {"evaluator", "closed-form directional channel"}});
  std::vector<std::filesystem::path> written;
  const auto& plan = result.plan;
  if (format == OutputFormat::json) {
    const auto path = dir / "linksim.json";
    json j;
    j["generated_at"] = generated_at();
    j["config"] = config;
    for (const auto& s : result.schemes) {
      j["schemes"].push_back({{"scheme", std::string(to_string(s.scheme))},
                              {"snr_db", s.snr_db},
                              {"mean_rate_bps_hz", s.mean_rate},
                              {"num_drops", plan.num_drops},
                              {"seed", plan.seed}});
    }
    open_output(path) << j.dump(2) << '\n';
    written.push_back(path);
  } else {
    const auto path = dir / "linksim.csv";
    auto out = open_output(path);
    write_provenance(out, "linksim", config.dump());
    out << "scheme,snr_db,mean_rate_bps_hz,num_drops,seed\n";
    for (const auto& s : result.schemes) {
      for (std::size_t k = 0; k < s.snr_db.size(); ++k) {
        out << to_string(s.scheme) << ',' << format_double(s.snr_db[k]) << ','
            << format_double(s.mean_rate[k]) << ',' << plan.num_drops << ','
            << plan.seed << '\n';
      }
    }
    written.push_back(path);
  }
  if (scenario.trace) {
    const auto path = dir / "linksim_trace.csv";
    auto out = open_output(path);
    write_provenance(out, "linksim-trace", config.dump());
    out << "drop,x_ue_m,scheme,x_p_m,gain\n";
    for (std::size_t i = 0; i < result.ue_positions.size(); ++i) {
      for (const auto& s : result.schemes) {
        out << i << ',' << format_double(result.ue_positions[i]) << ','
            << to_string(s.scheme) << ',' << format_double(s.positions[i])
            << ',' << format_double(s.gains[i]) << '\n';
      }
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace pass::io
