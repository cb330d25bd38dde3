// passim: batch front end for the pinching-antenna radiation model.
//
//   passim [--config FILE] [--out DIR] [--seed N] [--format csv|json] <command>
//
// Commands: modes, pattern, coupling-sweep, linksim.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pass/constants.hpp"
#include "pass/errors.hpp"
#include "pass/io/commands.hpp"
#include "pass/io/scenario.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kGenericError = 1,
  kConfigError = 2,
  kSolverError = 3,
  kDegenerateError = 4,
};

void report(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pass;

  CLI::App app{"Closed-form pinching-antenna radiation and link model"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string format;
  app.add_option("--config", config_path, "Scenario file (.ini or .json)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "RNG seed for linksim");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* modes = app.add_subcommand("modes", "Solve TE0 modes of main and PA slabs");

  auto* pattern = app.add_subcommand("pattern", "Far-field pattern per PA length");
  std::vector<double> lengths{0.75, 1.5, 2.0, 2.5};
  bool oracle = false;
  std::string aperture;
  pattern->add_option("--lengths", lengths, "PA lengths in wavelengths")
      ->delimiter(',');
  pattern->add_flag("--oracle", oracle,
                    "Also evaluate the brute-force radiation integral");
  pattern->add_option("--aperture", aperture, "offset | centered | physical")
      ->check(CLI::IsMember({"offset", "centered", "physical"}));

  auto* sweep = app.add_subcommand("coupling-sweep",
                                   "Coupled power versus PA length");
  double max_length = 4.0;
  std::size_t steps = 801;
  sweep->add_option("--max-length", max_length,
                    "Largest PA length in wavelengths")
      ->capture_default_str();
  sweep->add_option("--steps", steps, "Number of sweep points")
      ->capture_default_str();

  auto* linksim = app.add_subcommand("linksim",
                                     "Monte-Carlo spectral efficiency study");
  std::optional<std::size_t> drops;
  bool trace = false;
  linksim->add_option("--drops", drops, "Number of UE drops");
  linksim->add_flag("--trace", trace, "Write the per-drop trace CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    io::Scenario scenario =
        config_path.empty() ? io::Scenario{} : io::load_scenario(config_path);
    if (seed) scenario.seed = *seed;
    if (drops) scenario.drops = *drops;
    if (trace) scenario.trace = true;
    if (!aperture.empty()) scenario.aperture = io::parse_aperture(aperture);
    if (!format.empty()) scenario.formats = {format};
    io::validate(scenario);

    const std::filesystem::path dir =
        out_dir.empty() ? std::filesystem::path(scenario.output_directory)
                        : std::filesystem::path(out_dir);
    std::vector<io::OutputFormat> formats;
    for (const auto& f : scenario.formats) formats.push_back(io::parse_format(f));

    if (*modes) {
      const auto r = io::compute_modes(scenario);
      std::cout << io::format_modes(r);
      for (auto f : formats) report({io::write_modes(r, scenario, dir, f)});
    } else if (*pattern) {
      const auto runs = io::compute_patterns(scenario, lengths, oracle);
      std::cout << std::setprecision(6);
      for (const auto& run : runs) {
        std::cout << "Ls = " << run.length_lambda << " lambda: main lobe "
                  << run.pattern.main_lobe_angle() * 180.0 / constants::kPi
                  << " deg, peak D = " << run.pattern.peak_directivity();
        if (run.oracle_deviation) {
          std::cout << ", max |closed - oracle| / max|oracle| = "
                    << *run.oracle_deviation;
        }
        std::cout << '\n';
      }
      for (auto f : formats) report(io::write_patterns(runs, scenario, dir, f));
    } else if (*sweep) {
      const auto s = io::compute_coupling_sweep(scenario, max_length, steps);
      std::cout << std::setprecision(6) << "kappa = " << s.kappa
                << " rad/m, Lc (pair) = " << s.coupling_length * 1e3
                << " mm, Lc (single PA reference) = "
                << s.single_coupling_length * 1e3 << " mm\n";
      for (auto f : formats) {
        report({io::write_coupling_sweep(s, scenario, dir, f)});
      }
    } else if (*linksim) {
      const auto result = io::compute_linksim(scenario);
      std::cout << "evaluator: closed-form directional channel, seed "
                << result.plan.seed << ", " << result.plan.num_drops
                << " drops\n";
      for (const auto& s : result.schemes) {
        std::cout << "  " << std::setw(22) << std::left << to_string(s.scheme)
                  << std::right << std::setprecision(4);
        for (double r : s.mean_rate) std::cout << ' ' << std::setw(8) << r;
        std::cout << '\n';
      }
      for (auto f : formats) report(io::write_linksim(result, scenario, dir, f));
    }
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolverError;
  } catch (const DegenerateError& e) {
    std::cerr << "numerical degeneracy: " << e.what() << '\n';
    return kDegenerateError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGenericError;
  }
}
