#include "platewave/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "platewave/errors.hpp"

namespace pw {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError("empty value for key '" + key + "'");
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size())
    throw ConfigError("cannot parse number '" + v + "' for key '" + key + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  const double x = parse_number(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw ConfigError("key '" + key + "' expects an integer, got '" + value + "'");
  return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "' expects a comma-separated list");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  geometry.validate();
  material.validate();
  pulse.validate();
  grid.validate();
  if (degree != 1 && degree != 2) throw ConfigError("fem.degree must be 1 or 2");
  if (ny < 1) throw ConfigError("fem.ny must be >= 1");
  for (double x : probes)
    if (!(x > 0.0) || !(x < geometry.Lx))
      throw ConfigError("probes must lie strictly inside (0, Lx)");
}

RunConfig parse_config(const std::string& text) {
  static const std::map<std::string, std::set<std::string>> schema{
      {"geometry", {"Lx", "Ly"}},
      {"material", {"rho", "E", "nu", "lambda", "mu"}},
      {"pulse", {"f0", "phi", "T0", "T", "alpha"}},
      {"time", {"t_final", "steps"}},
      {"fem", {"degree", "ny"}},
      {"probes", {"x"}},
      {"output", {"dir"}},
  };

  std::map<std::string, std::map<std::string, std::string>> values;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!schema.count(section))
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section '" +
                          section + "'");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    if (section.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!schema.at(section).count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key +
                        "' in section [" + section + "]");
    if (!values[section].emplace(key, value).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }

  RunConfig cfg;
  auto has = [&](const std::string& s, const std::string& k) {
    auto it = values.find(s);
    return it != values.end() && it->second.count(k) > 0;
  };
  auto get = [&](const std::string& s, const std::string& k) -> const std::string& {
    return values.at(s).at(k);
  };

  if (has("geometry", "Lx")) cfg.geometry.Lx = parse_number("Lx", get("geometry", "Lx"));
  if (has("geometry", "Ly")) cfg.geometry.Ly = parse_number("Ly", get("geometry", "Ly"));

  {
    MaterialParams def = MaterialParams::aluminium();
    const double rho = has("material", "rho") ? parse_number("rho", get("material", "rho")) : def.rho;
    const double E = has("material", "E") ? parse_number("E", get("material", "E")) : def.E;
    const double nu = has("material", "nu") ? parse_number("nu", get("material", "nu")) : def.nu;
    const bool any_modulus = has("material", "rho") || has("material", "E") || has("material", "nu");
    if (has("material", "lambda") || has("material", "mu")) {
      MaterialParams m;
      m.rho = rho;
      m.E = E;
      m.nu = nu;
      m.lambda = has("material", "lambda") ? parse_number("lambda", get("material", "lambda"))
                                           : def.lambda;
      m.mu = has("material", "mu") ? parse_number("mu", get("material", "mu")) : def.mu;
      try {
        m.validate();
      } catch (const InvalidArgumentError& e) {
        throw ConfigError(std::string("material: ") + e.what());
      }
      cfg.material = m;
    } else if (any_modulus) {
      try {
        cfg.material = MaterialParams::from_engineering(rho, E, nu);
      } catch (const InvalidArgumentError& e) {
        throw ConfigError(std::string("material: ") + e.what());
      }
    }
  }

  {
    const bool has_f0 = has("pulse", "f0");
    const bool has_rest = has("pulse", "phi") || has("pulse", "T0") || has("pulse", "T") ||
                          has("pulse", "alpha");
    if (has_f0 && !has_rest) {
      const double f0 = parse_number("f0", get("pulse", "f0"));
      if (!has_pulse_preset(f0))
        throw ConfigError("pulse.f0 has no preset; give phi, T0, T and alpha explicitly");
      cfg.pulse = pulse_for_frequency(f0);
    } else if (has_rest) {
      PulseParams p = cfg.pulse;
      if (has_f0) p.f0 = parse_number("f0", get("pulse", "f0"));
      if (has("pulse", "phi")) p.phi = parse_number("phi", get("pulse", "phi"));
      if (has("pulse", "T0")) p.T0 = parse_number("T0", get("pulse", "T0"));
      if (has("pulse", "T")) p.T = parse_number("T", get("pulse", "T"));
      if (has("pulse", "alpha")) p.alpha = parse_number("alpha", get("pulse", "alpha"));
      cfg.pulse = p;
    }
  }

  if (has("time", "t_final")) cfg.grid.t_final = parse_number("t_final", get("time", "t_final"));
  if (has("time", "steps")) cfg.grid.steps = parse_int("steps", get("time", "steps"));
  if (has("fem", "degree")) cfg.degree = parse_int("degree", get("fem", "degree"));
  if (has("fem", "ny")) cfg.ny = parse_int("ny", get("fem", "ny"));
  if (has("probes", "x")) cfg.probes = parse_list("x", get("probes", "x"));
  if (has("output", "dir")) cfg.output_dir = get("output", "dir");

  try {
    cfg.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("config validation failed: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace pw
