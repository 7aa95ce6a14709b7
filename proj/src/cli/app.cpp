#include "qsym/cli/app.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "qsym/cli/report.hpp"
#include "qsym/exact/errors.hpp"

namespace qsym::cli {

namespace {

// Flag values land here; `set` tells which ones were given so the config file
// is only overridden where the user actually spoke.
struct Flags {
  std::string config_path;
  std::string model, hbar, c0, c1, c2, omega, out, format, m_norm;
  int dim = 0, split = 0, p_max = 0, levels = 0, l_max = 0, grid = 0;
  double rmax = 0, tol = 0;
  long max_terms = 0;
  bool timing = false;
};

template <typename T>
void take(std::optional<T>& dst, const CLI::Option* opt, const T& value) {
  if (opt->count() > 0) dst = value;
}

struct Bound {
  CLI::Option *config, *model, *dim, *split, *hbar, *c0, *c1, *c2, *omega, *p_max, *levels, *l_max, *grid, *rmax,
      *tol, *out, *format, *m_norm, *max_terms, *timing;
};

Bound bind(CLI::App* sub, Flags& f) {
  Bound b{};
  b.config = sub->add_option("--config", f.config_path, "JSON config file; flags override its keys");
  b.model = sub->add_option("--model", f.model, "kc or dso");
  b.dim = sub->add_option("--dim", f.dim, "dimension N");
  b.split = sub->add_option("--split", f.split, "DSO block split n");
  b.hbar = sub->add_option("--hbar", f.hbar, "hbar (number, fraction or 'symbolic')");
  b.c0 = sub->add_option("--c0", f.c0, "Coulomb coupling");
  b.c1 = sub->add_option("--c1", f.c1, "first singular coupling");
  b.c2 = sub->add_option("--c2", f.c2, "second singular coupling");
  b.omega = sub->add_option("--omega", f.omega, "oscillator frequency");
  b.p_max = sub->add_option("--p-max", f.p_max, "largest p = rep dimension - 1");
  b.levels = sub->add_option("--levels", f.levels, "KC principal numbers 1..levels");
  b.l_max = sub->add_option("--l-max", f.l_max, "largest angular label");
  b.grid = sub->add_option("--grid", f.grid, "oracle base grid size");
  b.rmax = sub->add_option("--rmax", f.rmax, "oracle outer radius (0 = model default)");
  b.tol = sub->add_option("--tol", f.tol, "relative tolerance");
  b.out = sub->add_option("--out", f.out, "report path (default stdout)");
  b.format = sub->add_option("--format", f.format, "json or csv");
  b.m_norm = sub->add_option("--m-norm", f.m_norm, "KC m-parameter reading: adopted or footnote");
  b.max_terms = sub->add_option("--max-terms", f.max_terms, "coefficient term cap for verify");
  b.timing = sub->add_flag("--timing", f.timing, "include wall times (breaks byte-identical reports)");
  return b;
}

RawConfig collect(const Bound& b, const Flags& f) {
  RawConfig raw;
  if (b.config->count() > 0) raw = load_config_file(f.config_path);
  RawConfig over;
  take(over.model, b.model, f.model);
  take(over.dim, b.dim, f.dim);
  take(over.split, b.split, f.split);
  take(over.hbar, b.hbar, f.hbar);
  take(over.c0, b.c0, f.c0);
  take(over.c1, b.c1, f.c1);
  take(over.c2, b.c2, f.c2);
  take(over.omega, b.omega, f.omega);
  take(over.p_max, b.p_max, f.p_max);
  take(over.levels, b.levels, f.levels);
  take(over.l_max, b.l_max, f.l_max);
  take(over.grid, b.grid, f.grid);
  take(over.rmax, b.rmax, f.rmax);
  take(over.tol, b.tol, f.tol);
  take(over.out, b.out, f.out);
  take(over.format, b.format, f.format);
  take(over.m_norm, b.m_norm, f.m_norm);
  take(over.max_terms, b.max_terms, f.max_terms);
  take(over.timing, b.timing, f.timing);
  raw.overlay(over);
  return raw;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quadratic symmetry algebras and their spectra", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Flags flags;
  const std::pair<Command, const char*> commands[] = {
      {Command::Verify, "Exact Q(3), Casimir, Lie-sector and direct-sum checks (symbolic parameters)"},
      {Command::Spectrum, "Physical spectra matched against deformed-oscillator representations"},
      {Command::Oracle, "Finite-difference eigenvalues against the closed-form spectra"},
      {Command::Scan, "All unitary representations up to p-max"}};
  std::vector<std::pair<CLI::App*, Bound>> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), help);
    subs.emplace_back(sub, bind(sub, flags));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  for (std::size_t k = 0; k < subs.size(); ++k) {
    const auto& [sub, bound] = subs[k];
    if (!sub->parsed()) continue;
    try {
      const RunConfig config = finalize(commands[k].first, collect(bound, flags));
      const Report report = run_command(config);
      const std::string text = config.format == Format::Csv ? report.to_csv() : report.to_json();
      if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) throw ConfigError("cannot write '" + *config.out + "'");
        file << text;
      } else {
        out << text;
      }
      return report.exit_code;
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << "\n" << sub->help();
      return kExitConfig;
    } catch (const ResourceCapExceeded& e) {
      err << "resource cap exceeded: " << e.what() << "\n";
      return kExitResource;
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::exception& e) {
      err << "failed: " << e.what() << "\n";
      return kExitFailed;
    }
  }
  return kExitConfig;
}

}  // namespace qsym::cli
