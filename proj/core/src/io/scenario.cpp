#include "pass/io/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "pass/constants.hpp"
#include "pass/errors.hpp"

namespace pass::io {

namespace {

using Section = std::map<std::string, std::string>;
using Document = std::map<std::string, Section>;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"waveguide", {"f_ghz", "n1", "n0", "width_mm", "v_number"}},
      {"pa", {"length_lambda", "position_m", "width_mm", "v_number"}},
      {"simulation",
       {"L_m", "ue_height_m", "drops", "seed", "snr_db", "grid_cm",
        "transmit_power_w", "log_base", "fixed_position_m"}},
      {"pattern", {"samples", "aperture"}},
      {"output", {"directory", "formats", "trace"}},
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

double to_number(const std::string& section, const std::string& key,
                 std::string_view raw) {
  std::string text = trim(raw);
  bool root = false;
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    text = trim(std::string_view(text).substr(5, text.size() - 6));
    root = true;
  }
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty() || !std::isfinite(v)) {
    throw ConfigError(where(section, key) + ": expected a number, got '" +
                      std::string(raw) + "'");
  }
  if (root) {
    if (v < 0.0) throw ConfigError(where(section, key) + ": sqrt of negative");
    v = std::sqrt(v);
  }
  return v;
}

std::uint64_t to_unsigned(const std::string& section, const std::string& key,
                          std::string_view raw) {
  const std::string text = trim(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(where(section, key) +
                      ": expected a non-negative integer, got '" +
                      std::string(raw) + "'");
  }
  return v;
}

bool to_bool(const std::string& section, const std::string& key,
             std::string_view raw) {
  const std::string t = trim(raw);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(where(section, key) + ": expected true/false, got '" + t +
                    "'");
}

std::vector<std::string> split_list(std::string_view raw) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(raw)};
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "60, 70, 80" or "start:step:stop".
std::vector<double> to_snr_list(const std::string& section,
                                const std::string& key, std::string_view raw) {
  const std::string text = trim(raw);
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string p;
    while (std::getline(in, p, ':')) parts.push_back(p);
    if (parts.size() != 3) {
      throw ConfigError(where(section, key) + ": range must be start:step:stop");
    }
    const double start = to_number(section, key, parts[0]);
    const double step = to_number(section, key, parts[1]);
    const double stop = to_number(section, key, parts[2]);
    if (!(step > 0.0) || stop < start) {
      throw ConfigError(where(section, key) + ": invalid range");
    }
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(
        std::floor((stop - start) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) {
      out.push_back(start + step * static_cast<double>(i));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    out.push_back(to_number(section, key, item));
  }
  if (out.empty()) throw ConfigError(where(section, key) + ": empty list");
  return out;
}

void apply_slab(const Section& sec, const std::string& name, SlabSpec& spec) {
  const bool has_w = sec.contains("width_mm");
  const bool has_v = sec.contains("v_number");
  if (has_w && has_v) {
    throw ConfigError("[" + name +
                      "] give exactly one of width_mm and v_number");
  }
  if (has_w) {
    spec = SlabSpec{to_number(name, "width_mm", sec.at("width_mm")),
                    std::nullopt};
  }
  if (has_v) {
    spec = SlabSpec{std::nullopt, to_number(name, "v_number", sec.at("v_number"))};
  }
}

Scenario interpret(const Document& doc) {
  for (const auto& [name, sec] : doc) {
    const auto it = known_keys().find(name);
    if (it == known_keys().end()) {
      throw ConfigError("unknown section [" + name + "]");
    }
    for (const auto& [key, value] : sec) {
      if (!it->second.contains(key)) {
        throw ConfigError("unknown key " + where(name, key));
      }
    }
  }

  Scenario s;
  auto section = [&](const std::string& name) -> const Section& {
    static const Section empty;
    const auto it = doc.find(name);
    return it == doc.end() ? empty : it->second;
  };
  auto num = [&](const std::string& name, const std::string& key,
                 double& target) {
    const Section& sec = section(name);
    if (const auto it = sec.find(key); it != sec.end()) {
      target = to_number(name, key, it->second);
    }
  };

  num("waveguide", "f_ghz", s.frequency_ghz);
  num("waveguide", "n1", s.n1);
  num("waveguide", "n0", s.n0);
  apply_slab(section("waveguide"), "waveguide", s.waveguide);

  num("pa", "length_lambda", s.pa_length_lambda);
  if (const auto& sec = section("pa"); sec.contains("position_m")) {
    s.pa_position_m = to_number("pa", "position_m", sec.at("position_m"));
  }
  apply_slab(section("pa"), "pa", s.pa);

  const Section& sim = section("simulation");
  num("simulation", "L_m", s.waveguide_length_m);
  num("simulation", "ue_height_m", s.ue_height_m);
  num("simulation", "grid_cm", s.grid_cm);
  num("simulation", "transmit_power_w", s.transmit_power_w);
  if (sim.contains("drops")) {
    s.drops = to_unsigned("simulation", "drops", sim.at("drops"));
  }
  if (sim.contains("seed")) {
    s.seed = to_unsigned("simulation", "seed", sim.at("seed"));
  }
  if (sim.contains("snr_db")) {
    s.snr_db = to_snr_list("simulation", "snr_db", sim.at("snr_db"));
  }
  if (sim.contains("fixed_position_m")) {
    s.fixed_position_m =
        to_number("simulation", "fixed_position_m", sim.at("fixed_position_m"));
  }
  if (sim.contains("log_base")) {
    const std::string b = trim(sim.at("log_base"));
    if (b == "2" || b == "log2") {
      s.log_base = LogBase::two;
    } else if (b == "e" || b == "ln" || b == "natural") {
      s.log_base = LogBase::natural;
    } else {
      throw ConfigError("[simulation] log_base: expected 2 or e, got '" + b +
                        "'");
    }
  }

  const Section& pat = section("pattern");
  if (pat.contains("samples")) {
    s.pattern_samples = to_unsigned("pattern", "samples", pat.at("samples"));
  }
  if (pat.contains("aperture")) {
    s.aperture = parse_aperture(trim(pat.at("aperture")));
  }

  const Section& out = section("output");
  if (out.contains("directory")) s.output_directory = trim(out.at("directory"));
  if (out.contains("formats")) s.formats = split_list(out.at("formats"));
  if (out.contains("trace")) s.trace = to_bool("output", "trace", out.at("trace"));

  validate(s);
  return s;
}

double resolve_width(const Scenario& s, const SlabSpec& spec) {
  if (spec.width_mm) return *spec.width_mm * 1e-3;
  return width_for_v(s.n1, s.n0, s.frequency_ghz * 1e9, *spec.v_number);
}

nlohmann::json slab_json(const SlabSpec& spec) {
  nlohmann::json j = nlohmann::json::object();
  if (spec.width_mm) j["width_mm"] = *spec.width_mm;
  if (spec.v_number) j["v_number"] = *spec.v_number;
  return j;
}

}  // namespace

std::string_view to_string(ApertureModel model) {
  switch (model) {
    case ApertureModel::offset:
      return "offset";
    case ApertureModel::centered_offset:
      return "centered";
    case ApertureModel::physical_core:
      return "physical";
  }
  return "offset";
}

ApertureModel parse_aperture(std::string_view name) {
  if (name == "offset") return ApertureModel::offset;
  if (name == "centered") return ApertureModel::centered_offset;
  if (name == "physical") return ApertureModel::physical_core;
  throw ConfigError("aperture: expected offset, centered or physical, got '" +
                    std::string(name) + "'");
}

Scenario parse_ini(std::string_view text) {
  boost::property_tree::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("scenario file: ") + e.message() +
                      " (line " + std::to_string(e.line()) + ")");
  }
  Document doc;
  for (const auto& [name, sec] : tree) {
    if (sec.empty()) {
      throw ConfigError("key '" + name + "' outside of any section");
    }
    Section& target = doc[name];
    for (const auto& [key, value] : sec) {
      target[key] = value.get_value<std::string>();
    }
  }
  return interpret(doc);
}

Scenario parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("scenario JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("scenario JSON must be an object");
  Document doc;
  for (const auto& [name, sec] : j.items()) {
    if (!sec.is_object()) {
      throw ConfigError("scenario JSON: section '" + name +
                        "' must be an object");
    }
    Section& target = doc[name];
    for (const auto& [key, value] : sec.items()) {
      if (value.is_string()) {
        target[key] = value.get<std::string>();
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
          if (!joined.empty()) joined += ",";
          joined += item.is_string() ? item.get<std::string>() : item.dump();
        }
        target[key] = joined;
      } else {
        target[key] = value.dump();
      }
    }
  }
  return interpret(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file '" + path.string() + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return path.extension() == ".json" ? parse_json(buf.str())
                                     : parse_ini(buf.str());
}

void validate(const Scenario& s) {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0)) throw ConfigError(std::string(field) + " must be positive");
  };
  positive(s.frequency_ghz, "[waveguide] f_ghz");
  if (!(s.n0 >= 1.0)) throw ConfigError("[waveguide] n0 must be >= 1");
  if (!(s.n1 > s.n0)) throw ConfigError("[waveguide] n1 must exceed n0");
  for (const auto& [spec, name] :
       {std::pair{&s.waveguide, "waveguide"}, std::pair{&s.pa, "pa"}}) {
    if (spec->width_mm && spec->v_number) {
      throw ConfigError(std::string("[") + name +
                        "] give exactly one of width_mm and v_number");
    }
    if (spec->width_mm) positive(*spec->width_mm, "width_mm");
    if (spec->v_number) {
      positive(*spec->v_number, "v_number");
      if (*spec->v_number >= constants::kPi / 2.0) {
        throw MultimodeError(std::string("[") + name + "] v_number = " +
                             std::to_string(*spec->v_number) +
                             " >= pi/2: multimode slab");
      }
    }
  }
  if (!s.waveguide.width_mm && !s.waveguide.v_number) {
    throw ConfigError("[waveguide] needs width_mm or v_number");
  }
  if (!(s.pa_length_lambda >= 0.0)) {
    throw ConfigError("[pa] length_lambda must be >= 0");
  }
  positive(s.waveguide_length_m, "[simulation] L_m");
  positive(s.ue_height_m, "[simulation] ue_height_m");
  positive(s.grid_cm, "[simulation] grid_cm");
  positive(s.transmit_power_w, "[simulation] transmit_power_w");
  if (s.drops < 1) throw ConfigError("[simulation] drops must be >= 1");
  if (s.snr_db.empty()) throw ConfigError("[simulation] snr_db is empty");
  if (!std::is_sorted(s.snr_db.begin(), s.snr_db.end())) {
    throw ConfigError("[simulation] snr_db must be ascending");
  }
  if (s.pattern_samples < 16) {
    throw ConfigError("[pattern] samples must be >= 16");
  }
  for (const auto& f : s.formats) {
    if (f != "csv" && f != "json") {
      throw ConfigError("[output] formats: unknown format '" + f + "'");
    }
  }
}

double wavelength(const Scenario& s) {
  return waveguide_slab(s).wavelength();
}

SlabGeometry waveguide_slab(const Scenario& s) {
  SlabGeometry g{resolve_width(s, s.waveguide), s.n1, s.n0,
                 s.frequency_ghz * 1e9};
  g.validate();
  return g;
}

SlabGeometry pa_slab(const Scenario& s) {
  if (!s.pa.width_mm && !s.pa.v_number) return waveguide_slab(s);
  SlabGeometry g{resolve_width(s, s.pa), s.n1, s.n0, s.frequency_ghz * 1e9};
  g.validate();
  return g;
}

PassConfiguration configuration(const Scenario& s, double pa_length_m) {
  const double x_p = s.pa_position_m.value_or(0.5 * s.waveguide_length_m);
  return PassConfiguration::make(waveguide_slab(s), pa_slab(s), pa_length_m,
                                 x_p, s.waveguide_length_m);
}

SimulationPlan simulation_plan(const Scenario& s) {
  SimulationPlan plan;
  plan.waveguide_length = s.waveguide_length_m;
  plan.ue_height = s.ue_height_m;
  plan.num_drops = s.drops;
  plan.snr_db = s.snr_db;
  plan.grid_resolution = s.grid_cm * 1e-2;
  plan.seed = s.seed;
  plan.fixed_position = s.fixed_position_m;
  plan.log_base = s.log_base;
  return plan;
}

std::string to_json(const Scenario& s, int indent) {
  nlohmann::json j;
  j["waveguide"] = slab_json(s.waveguide);
  j["waveguide"]["f_ghz"] = s.frequency_ghz;
  j["waveguide"]["n1"] = s.n1;
  j["waveguide"]["n0"] = s.n0;
  j["pa"] = slab_json(s.pa);
  j["pa"]["length_lambda"] = s.pa_length_lambda;
  j["pa"]["position_m"] =
      s.pa_position_m.value_or(0.5 * s.waveguide_length_m);
  auto& sim = j["simulation"];
  sim["L_m"] = s.waveguide_length_m;
  sim["ue_height_m"] = s.ue_height_m;
  sim["drops"] = s.drops;
  sim["seed"] = s.seed;
  sim["snr_db"] = s.snr_db;
  sim["grid_cm"] = s.grid_cm;
  sim["transmit_power_w"] = s.transmit_power_w;
  sim["log_base"] = s.log_base == LogBase::two ? "2" : "e";
  sim["fixed_position_m"] =
      s.fixed_position_m.value_or(0.5 * s.waveguide_length_m);
  j["pattern"]["samples"] = s.pattern_samples;
  j["pattern"]["aperture"] = std::string(to_string(s.aperture));
  j["output"]["directory"] = s.output_directory;
  j["output"]["formats"] = s.formats;
  j["output"]["trace"] = s.trace;

  const SlabGeometry main = waveguide_slab(s);
  const SlabGeometry pa = pa_slab(s);
  auto& d = j["derived"];
  d["wavelength_m"] = main.wavelength();
  d["waveguide_width_m"] = main.width;
  d["waveguide_v"] = normalized_frequency(main);
  d["pa_width_m"] = pa.width;
  d["pa_v"] = normalized_frequency(pa);
  d["pa_length_m"] = s.pa_length_lambda * main.wavelength();
  return j.dump(indent);
}

}  // namespace pass::io
