#include "qsym/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qsym/algebra/q3.hpp"
#include "qsym/exact/errors.hpp"
#include "qsym/oracle/radial.hpp"

namespace qsym::cli {

using nlohmann::ordered_json;
using spectra::Number;
using spectra::QuantumNumbers;

ordered_json rounded(double value) {
  if (value == 0) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::stod(buf);
}

namespace {

ordered_json rounded(const Number& value) {
  if (value.is_zero()) return 0.0;
  return std::stod(value.decimal(15));
}

ordered_json exact_or_null(const Number& value) {
  if (!value.exact()) return nullptr;
  return value.exact_string();
}

std::string status_of(bool ok) { return ok ? "pass" : "fail"; }

ordered_json header(const RunConfig& config) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = to_string(config.command);
  doc["config"] = config.to_json();
  return doc;
}

void finish(Report& r, bool ok, int failure_code = kExitFailed) {
  r.exit_code = ok ? kExitOk : failure_code;
  r.doc["status"] = status_of(ok);
  r.doc["exit_code"] = r.exit_code;
}

// Restores the global operator caps on scope exit.
class LimitGuard {
 public:
  explicit LimitGuard(std::size_t max_terms) : saved_(weyl::limits()) {
    weyl::limits().max_coefficient_terms = max_terms;
  }
  ~LimitGuard() { weyl::limits() = saved_; }
  LimitGuard(const LimitGuard&) = delete;
  LimitGuard& operator=(const LimitGuard&) = delete;

 private:
  weyl::Limits saved_;
};

void put_quantum_numbers(ordered_json& row, model::Kind kind, const QuantumNumbers& qn) {
  if (kind == model::Kind::KC) {
    row["n"] = qn.n;
    row["I"] = qn.I;
    row["l"] = qn.l;
  } else {
    row["n1"] = qn.n1;
    row["n2"] = qn.n2;
    row["l1"] = qn.l1;
    row["l2"] = qn.l2;
  }
}

int block_l_max(const RunConfig& c, int block) {
  const int d = block == 1 ? c.params.split : c.params.dim - c.params.split;
  return d == 1 ? 0 : c.l_max;
}

// Rows for spectrum and oracle: KC over n <= levels, DSO over n1 + n2 <= p_max.
std::vector<QuantumNumbers> state_grid(const RunConfig& c) {
  std::vector<QuantumNumbers> out;
  if (c.params.kind == model::Kind::KC) {
    for (int n = 1; n <= c.levels; ++n) {
      for (int I = 0; I <= std::min(n - 1, c.l_max); ++I) {
        for (int l = I; l <= std::min(n - 1, c.l_max); ++l) out.push_back(QuantumNumbers::kc(n, I, l));
      }
    }
    return out;
  }
  for (int p = 0; p <= c.p_max; ++p) {
    for (int n1 = p; n1 >= 0; --n1) {
      for (int l1 = 0; l1 <= block_l_max(c, 1); ++l1) {
        for (int l2 = 0; l2 <= block_l_max(c, 2); ++l2) out.push_back(QuantumNumbers::dso(n1, p - n1, l1, l2));
      }
    }
  }
  return out;
}

std::string cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += cell(v[i]);
    }
    return s;
  }
  return v.dump();
}

}  // namespace

std::string Report::to_json() const { return doc.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_columns(Command command, model::Kind kind) {
  const bool kc = kind == model::Kind::KC;
  std::vector<std::string> qn = kc ? std::vector<std::string>{"n", "I", "l"}
                                   : std::vector<std::string>{"n1", "n2", "l1", "l2"};
  auto join = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (command) {
    case Command::Verify:
      return {"name", "status", "term_count", "coefficient_size", "first_terms", "seconds"};
    case Command::Spectrum:
      return join(join({"label"}, qn),
                  {"p", "energy_physical", "energy_physical_exact", "energy_algebraic", "energy_algebraic_exact",
                   "relative_error", "exact", "branch", "integer_positive", "continuous_positive",
                   "oscillator_residual", "status"});
    case Command::Oracle:
      return join(join({"label"}, qn), {"formula", "oracle", "relative_error", "ratio", "block_energies", "converged",
                                        "within_tolerance", "status"});
    case Command::Scan:
      return join({"p"}, join(kc ? std::vector<std::string>{"I"} : std::vector<std::string>{"l1", "l2"},
                              {"branch", "zero_root", "top_root", "energy", "energy_exact", "u", "u_exact",
                               "phi_values", "integer_positive", "continuous_positive"}));
  }
  return {};
}

std::string Report::to_csv() const {
  const Command command = doc.at("command") == "verify"     ? Command::Verify
                          : doc.at("command") == "spectrum" ? Command::Spectrum
                          : doc.at("command") == "oracle"   ? Command::Oracle
                                                            : Command::Scan;
  const model::Kind kind = model::parse_kind(doc.at("config").at("model").get<std::string>());
  const auto columns = csv_columns(command, kind);
  const ordered_json& table = command == Command::Verify ? doc.at("checks") : doc.at("rows");
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
  out << "\r\n";
  for (const auto& row : table) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << csv_escape(cell(row.contains(columns[i]) ? row.at(columns[i]) : ordered_json()));
    }
    out << "\r\n";
  }
  return out.str();
}

Report cmd_verify(const RunConfig& config) {
  LimitGuard guard(config.max_terms);
  const model::Model m(config.params);
  std::vector<std::pair<std::string, algebra::Residual>> results;
  auto add = [&](const std::string& group, const std::vector<algebra::Residual>& rs) {
    for (const auto& r : rs) results.emplace_back(group + ": " + r.name, r);
  };
  add("integrals", algebra::integral_checks(m));
  const auto q3 = algebra::verify_q3(m);
  add("Q(3)", {q3.ac, q3.bc});
  results.emplace_back("Casimir: central form", algebra::verify_casimir(m));
  add("Casimir", algebra::casimir_commutes(m));
  add("Lie sector", algebra::lie_sector_checks(m));
  add("direct sum", algebra::direct_sum_checks(m));
  add("central", algebra::central_checks(m));
  std::stable_sort(results.begin(), results.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  Report r;
  r.doc = header(config);
  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& [name, res] : results) {
    ordered_json c;
    c["name"] = name;
    c["status"] = status_of(res.zero());
    c["term_count"] = res.term_count;
    c["coefficient_size"] = res.coefficient_size;
    c["first_terms"] = res.first_terms;
    c["seconds"] = config.timing ? rounded(res.seconds) : ordered_json();
    checks.push_back(c);
    failed += res.zero() ? 0 : 1;
  }
  r.doc["checks"] = checks;
  r.doc["summary"] = {{"checks", results.size()}, {"passed", results.size() - failed}, {"failed", failed}};
  finish(r, failed == 0);
  return r;
}

Report cmd_spectrum(const RunConfig& config) {
  Report r;
  r.doc = header(config);
  const auto kind = config.params.kind;
  ordered_json rows = ordered_json::array();
  std::size_t matched = 0;
  std::size_t exact = 0;
  const auto states = state_grid(config);
  for (const auto& qn : states) {
    const int p = qn.p(kind);
    const auto m = spectra::m_parameters(config.params, qn.angular(kind), config.phys, config.m_norm);
    const auto reps = spectra::enumerate_reps(config.params, m, p, config.phys);
    const auto v = spectra::match_identification(config.params, qn, config.phys, reps, config.tol);
    ordered_json row;
    row["label"] = qn.label(kind);
    put_quantum_numbers(row, kind, qn);
    row["p"] = p;
    row["energy_physical"] = rounded(v.physical);
    row["energy_physical_exact"] = exact_or_null(v.physical);
    if (v.index) {
      const auto& rep = reps[*v.index];
      const auto osc = spectra::check_oscillator_relations(spectra::build_oscillator_rep(rep), rep.phi);
      row["energy_algebraic"] = rounded(v.algebraic);
      row["energy_algebraic_exact"] = exact_or_null(v.algebraic);
      row["relative_error"] = rounded(static_cast<double>(v.relative_error));
      row["exact"] = v.exact;
      row["branch"] = v.branch.label();
      row["integer_positive"] = rep.integer_positive;
      row["continuous_positive"] = rep.continuous_positive;
      row["oscillator_residual"] = rounded(static_cast<double>(osc.max()));
    } else {
      for (const char* k : {"energy_algebraic", "energy_algebraic_exact", "relative_error", "exact", "branch",
                            "integer_positive", "continuous_positive", "oscillator_residual"}) {
        row[k] = nullptr;
      }
    }
    row["status"] = status_of(v.matched);
    matched += v.matched ? 1 : 0;
    exact += v.matched && v.exact ? 1 : 0;
    rows.push_back(row);
  }
  r.doc["rows"] = rows;
  r.doc["summary"] = {{"rows", states.size()}, {"matched", matched}, {"matched_exact", exact},
                      {"unmatched", states.size() - matched}};
  finish(r, matched == states.size());
  return r;
}

Report cmd_oracle(const RunConfig& config) {
  Report r;
  r.doc = header(config);
  const auto kind = config.params.kind;
  oracle::OracleOptions opts;
  opts.points = config.grid;
  opts.r_max = config.rmax;
  opts.tolerance = config.tol;
  ordered_json rows = ordered_json::array();
  std::size_t passed = 0;
  std::size_t unconverged = 0;
  const auto states = state_grid(config);
  for (const auto& qn : states) {
    const auto cmp = oracle::oracle_compare(config.params, qn, config.phys, opts);
    ordered_json row;
    row["label"] = cmp.label;
    put_quantum_numbers(row, kind, qn);
    row["formula"] = rounded(cmp.formula);
    row["oracle"] = rounded(cmp.oracle);
    row["relative_error"] = rounded(cmp.relative_error);
    row["ratio"] = rounded(cmp.ratio);
    ordered_json blocks = ordered_json::array();
    for (double e : cmp.block_energies) blocks.push_back(rounded(e));
    row["block_energies"] = blocks;
    row["converged"] = cmp.converged;
    row["within_tolerance"] = cmp.within_tolerance;
    const bool ok = cmp.converged && cmp.within_tolerance;
    row["status"] = status_of(ok);
    passed += ok ? 1 : 0;
    unconverged += cmp.converged ? 0 : 1;
    rows.push_back(row);
  }
  r.doc["rows"] = rows;
  r.doc["summary"] = {{"rows", states.size()}, {"passed", passed}, {"non_converged", unconverged},
                      {"failed", states.size() - passed}};
  finish(r, passed == states.size());
  return r;
}

Report cmd_scan(const RunConfig& config) {
  Report r;
  r.doc = header(config);
  const auto kind = config.params.kind;
  std::vector<spectra::AngularLabels> labels;
  if (kind == model::Kind::KC) {
    for (int I = 0; I <= config.l_max; ++I) labels.push_back({I, 0, 0});
  } else {
    for (int l1 = 0; l1 <= block_l_max(config, 1); ++l1) {
      for (int l2 = 0; l2 <= block_l_max(config, 2); ++l2) labels.push_back({0, l1, l2});
    }
  }
  ordered_json rows = ordered_json::array();
  ordered_json groups = ordered_json::array();
  for (int p = 0; p <= config.p_max; ++p) {
    for (const auto& lab : labels) {
      const auto m = spectra::m_parameters(config.params, lab, config.phys, config.m_norm);
      const auto reps = spectra::enumerate_reps(config.params, m, p, config.phys);
      for (const auto& rep : reps) {
        ordered_json row;
        row["p"] = p;
        if (kind == model::Kind::KC) {
          row["I"] = lab.I;
        } else {
          row["l1"] = lab.l1;
          row["l2"] = lab.l2;
        }
        row["branch"] = rep.branch.label();
        row["zero_root"] = rep.branch.zero_root;
        row["top_root"] = rep.branch.top_root;
        row["energy"] = rounded(rep.energy);
        row["energy_exact"] = exact_or_null(rep.energy);
        row["u"] = rounded(rep.u);
        row["u_exact"] = exact_or_null(rep.u);
        ordered_json phi = ordered_json::array();
        for (const auto& v : rep.phi_values) phi.push_back(rounded(v));
        row["phi_values"] = phi;
        row["integer_positive"] = rep.integer_positive;
        row["continuous_positive"] = rep.continuous_positive;
        rows.push_back(row);
      }
      ordered_json g;
      g["p"] = p;
      if (kind == model::Kind::KC) {
        g["I"] = lab.I;
      } else {
        g["l1"] = lab.l1;
        g["l2"] = lab.l2;
      }
      g["solutions"] = reps.size();
      g["surviving_zero_roots"] = spectra::surviving_zero_roots(reps);
      groups.push_back(g);
    }
  }
  r.doc["rows"] = rows;
  r.doc["summary"] = {{"rows", rows.size()}, {"groups", groups}};
  finish(r, true);
  return r;
}

Report run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Verify: return cmd_verify(config);
    case Command::Spectrum: return cmd_spectrum(config);
    case Command::Oracle: return cmd_oracle(config);
    case Command::Scan: return cmd_scan(config);
  }
  throw ConfigError("unknown command");
}

}  // namespace qsym::cli
