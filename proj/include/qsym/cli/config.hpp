#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qsym/spectra/rep.hpp"

namespace qsym::cli {

enum class Command { Verify, Spectrum, Oracle, Scan };
enum class Format { Json, Csv };

std::string to_string(Command c);

/// Invalid or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raw settings before validation: every field is optional so that a config file
/// and command-line flags can be layered (flags win).
struct RawConfig {
  std::optional<std::string> model;
  std::optional<int> dim;
  std::optional<int> split;
  std::optional<std::string> hbar, c0, c1, c2, omega;
  std::optional<int> p_max;
  std::optional<int> levels;
  std::optional<int> l_max;
  std::optional<int> grid;
  std::optional<double> rmax;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> m_norm;
  std::optional<long> max_terms;
  std::optional<bool> timing;

  /// Fields set in `over` replace those here.
  void overlay(const RawConfig& over);
};

/// Reads a single JSON object; unknown keys are rejected.
RawConfig parse_config_json(const nlohmann::json& doc);
RawConfig load_config_file(const std::string& path);

struct RunConfig {
  Command command = Command::Verify;
  model::ModelParams params;
  spectra::PhysicalParams phys;
  int p_max = 3;
  int levels = 3;
  int l_max = 0;
  int grid = 4096;
  double rmax = 0;  // 0 = model default
  double tol = 0;
  std::optional<std::string> out;
  Format format = Format::Json;
  spectra::MNormalization m_norm = spectra::MNormalization::Adopted;
  std::size_t max_terms = 4'000'000;
  bool timing = false;

  /// Echo of the effective configuration for reports.
  nlohmann::ordered_json to_json() const;
};

/// Validates and fills defaults. verify is symbolic-only, the other commands are
/// numeric-only; mixing throws ConfigError.
RunConfig finalize(Command command, const RawConfig& raw);

}  // namespace qsym::cli
