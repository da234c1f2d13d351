#include "hopf/config.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "hopf/errors.hpp"

namespace hopf {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& value, int line, const std::string& key) {
  T out{};
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    throw ConfigError(line, "invalid value '" + value + "' for " + key);
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) throw ConfigError(line, "empty value for " + key);
    if (!seen.insert(key).second) throw ConfigError(line, "duplicate key " + key);

    HopfModel& m = cfg.model;
    if (key == "n") {
      m.n = parse_number<int>(value, line, key);
    } else if (key == "lambda") {
      m.lambda = parse_number<double>(value, line, key);
    } else if (key == "quad_tol") {
      m.quad_tol = parse_number<double>(value, line, key);
    } else if (key == "series_tol") {
      m.series_tol = parse_number<double>(value, line, key);
    } else if (key == "solve_tol") {
      m.solve_tol = parse_number<double>(value, line, key);
    } else if (key == "sphere_pts") {
      m.grid.sphere_pts = parse_number<int>(value, line, key);
    } else if (key == "theta_pts") {
      m.grid.theta_pts = parse_number<int>(value, line, key);
    } else if (key == "radial_layers") {
      m.grid.radial_layers = parse_number<int>(value, line, key);
    } else if (key == "field") {
      cfg.field = value;
    } else if (key == "phi") {
      cfg.phi = value;
    } else if (key == "p_max") {
      cfg.p_max = parse_number<int>(value, line, key);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line, key);
    } else {
      throw ConfigError(line, "unknown key " + key);
    }
    if (key == "sphere_pts" || key == "theta_pts" || key == "radial_layers") {
      if (parse_number<int>(value, line, key) < 8) {
        throw ConfigError(line, key + " must be at least 8");
      }
    }
    if (key == "p_max" && cfg.p_max < 4) throw ConfigError(line, "p_max must be at least 4");
  }
  try {
    cfg.model.validate();
  } catch (const ModelError& e) {
    throw ConfigError(0, e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config " + path);
  return parse_config(in);
}

}  // namespace hopf
