#include "qsym/cli/config.hpp"

#include <fstream>
#include <set>

#include "qsym/exact/errors.hpp"

namespace qsym::cli {

using nlohmann::json;
using spectra::Number;

std::string to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Spectrum: return "spectrum";
    case Command::Oracle: return "oracle";
    case Command::Scan: return "scan";
  }
  return "?";
}

void RawConfig::overlay(const RawConfig& o) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(model, o.model);
  take(dim, o.dim);
  take(split, o.split);
  take(hbar, o.hbar);
  take(c0, o.c0);
  take(c1, o.c1);
  take(c2, o.c2);
  take(omega, o.omega);
  take(p_max, o.p_max);
  take(levels, o.levels);
  take(l_max, o.l_max);
  take(grid, o.grid);
  take(rmax, o.rmax);
  take(tol, o.tol);
  take(out, o.out);
  take(format, o.format);
  take(m_norm, o.m_norm);
  take(max_terms, o.max_terms);
  take(timing, o.timing);
}

namespace {

template <typename T>
T read(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

int read_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return read<int>(v, key);
}

// Numbers keep their shortest decimal spelling so "0.1" stays exactly 1/10.
std::string read_value(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw ConfigError("config key '" + key + "' must be a number or a string");
}

}  // namespace

RawConfig parse_config_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {"model", "dim",  "split", "hbar",   "c0",         "c1",
                                              "c2",    "omega", "p_max", "levels", "l_max",      "grid",
                                              "rmax",  "tol",  "out",   "format", "max_terms", "timing",
                                              "m_norm"};
  RawConfig c;
  for (const auto& [key, v] : doc.items()) {
    if (known.count(key) == 0) throw ConfigError("unknown config key '" + key + "'");
    if (key == "model") c.model = read<std::string>(v, key);
    if (key == "dim") c.dim = read_int(v, key);
    if (key == "split") c.split = read_int(v, key);
    if (key == "hbar") c.hbar = read_value(v, key);
    if (key == "c0") c.c0 = read_value(v, key);
    if (key == "c1") c.c1 = read_value(v, key);
    if (key == "c2") c.c2 = read_value(v, key);
    if (key == "omega") c.omega = read_value(v, key);
    if (key == "p_max") c.p_max = read_int(v, key);
    if (key == "levels") c.levels = read_int(v, key);
    if (key == "l_max") c.l_max = read_int(v, key);
    if (key == "grid") c.grid = read_int(v, key);
    if (key == "rmax") c.rmax = read<double>(v, key);
    if (key == "tol") c.tol = read<double>(v, key);
    if (key == "out") c.out = read<std::string>(v, key);
    if (key == "format") c.format = read<std::string>(v, key);
    if (key == "m_norm") c.m_norm = read<std::string>(v, key);
    if (key == "max_terms") c.max_terms = read<long>(v, key);
    if (key == "timing") c.timing = read<bool>(v, key);
  }
  return c;
}

RawConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config_json(doc);
}

RunConfig finalize(Command command, const RawConfig& raw) {
  RunConfig c;
  c.command = command;
  if (!raw.model) throw ConfigError("--model is required (kc or dso)");
  try {
    c.params.kind = model::parse_kind(*raw.model);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  const bool kc = c.params.kind == model::Kind::KC;
  c.params.dim = raw.dim.value_or(kc ? 3 : 4);
  if (kc && raw.split) throw ConfigError("--split applies to the dso model only");
  c.params.split = kc ? 0 : raw.split.value_or(c.params.dim / 2);
  try {
    c.params.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }

  const std::pair<const char*, const std::optional<std::string>*> values[] = {
      {"hbar", &raw.hbar}, {"c0", &raw.c0}, {"c1", &raw.c1}, {"c2", &raw.c2}, {"omega", &raw.omega}};
  Number* targets[] = {&c.phys.hbar, &c.phys.c0, &c.phys.c1, &c.phys.c2, &c.phys.omega};
  for (std::size_t k = 0; k < std::size(values); ++k) {
    const auto& [name, v] = values[k];
    if (!*v) continue;
    const bool symbolic = **v == "symbolic";
    if (command == Command::Verify && !symbolic) {
      throw ConfigError(std::string("verify is symbolic in every parameter; --") + name + " must be 'symbolic'");
    }
    if (command != Command::Verify && symbolic) {
      throw ConfigError(to_string(command) + " needs numeric parameters; --" + name + " is 'symbolic'");
    }
    if (symbolic) continue;
    try {
      *targets[k] = Number::parse(**v);
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("--") + name + ": " + e.what());
    }
  }
  try {
    c.phys.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }

  c.p_max = raw.p_max.value_or(3);
  if (c.p_max < 0 || c.p_max > spectra::kMaxRepDimension) throw ConfigError("--p-max must lie in [0, 64]");
  c.levels = raw.levels.value_or(3);
  if (c.levels < 1 || c.levels > 64) throw ConfigError("--levels must lie in [1, 64]");
  c.l_max = raw.l_max.value_or(0);
  if (c.l_max < 0 || c.l_max > 16) throw ConfigError("--l-max must lie in [0, 16]");
  c.grid = raw.grid.value_or(4096);
  if (c.grid < 4 || c.grid > (1 << 20)) throw ConfigError("--grid must lie in [4, 1048576]");
  c.rmax = raw.rmax.value_or(0);
  if (c.rmax < 0) throw ConfigError("--rmax must be positive");
  c.tol = raw.tol.value_or(command == Command::Spectrum ? spectra::kMatchTolerance : 1e-6);
  if (!(c.tol > 0)) throw ConfigError("--tol must be positive");
  c.out = raw.out;
  const std::string format = raw.format.value_or("json");
  if (format == "json") {
    c.format = Format::Json;
  } else if (format == "csv") {
    c.format = Format::Csv;
  } else {
    throw ConfigError("--format must be json or csv");
  }
  const std::string norm = raw.m_norm.value_or("adopted");
  if (norm == "footnote") {
    c.m_norm = spectra::MNormalization::Footnote;
  } else if (norm != "adopted") {
    throw ConfigError("--m-norm must be adopted or footnote");
  }
  if (raw.max_terms) {
    if (*raw.max_terms < 1) throw ConfigError("--max-terms must be positive");
    c.max_terms = static_cast<std::size_t>(*raw.max_terms);
  }
  c.timing = raw.timing.value_or(false);
  return c;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = model::to_string(params.kind);
  j["dim"] = params.dim;
  if (params.kind == model::Kind::DSO) j["split"] = params.split;
  if (command == Command::Verify) {
    j["parameters"] = "symbolic";
  } else {
    nlohmann::ordered_json p;
    p["hbar"] = phys.hbar.exact_string();
    p["c0"] = phys.c0.exact_string();
    p["c1"] = phys.c1.exact_string();
    p["c2"] = phys.c2.exact_string();
    p["omega"] = phys.omega.exact_string();
    j["parameters"] = p;
  }
  switch (command) {
    case Command::Verify:
      j["max_terms"] = max_terms;
      break;
    case Command::Spectrum:
      j["levels"] = levels;
      j["p_max"] = p_max;
      j["l_max"] = l_max;
      j["tol"] = tol;
      j["m_norm"] = m_norm == spectra::MNormalization::Footnote ? "footnote" : "adopted";
      break;
    case Command::Oracle:
      j["levels"] = levels;
      j["p_max"] = p_max;
      j["l_max"] = l_max;
      j["grid"] = grid;
      j["rmax"] = rmax;
      j["tol"] = tol;
      break;
    case Command::Scan:
      j["p_max"] = p_max;
      j["l_max"] = l_max;
      j["m_norm"] = m_norm == spectra::MNormalization::Footnote ? "footnote" : "adopted";
      break;
  }
  return j;
}

}  // namespace qsym::cli
