#include "qsym/oracle/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsym/exact/errors.hpp"

namespace qsym::oracle {

namespace {

using Vec = std::vector<long double>;

struct Tridiagonal {
  Vec diag;
  Vec off;
};

long double potential(const RadialProblem& p, long double r) {
  if (p.kind == RadialKind::KC) return -p.c0 / r;
  return 0.5L * p.omega * p.omega * r * r;
}

// u = r^{(d-1)/2} R on nodes j h, j = 1..P-1, Dirichlet at 0 and r_max.
Tridiagonal u_form(const RadialProblem& p, double r_max, int cells) {
  const long double h = static_cast<long double>(r_max) / cells;
  const long double h2 = p.hbar * p.hbar;
  const long double lt = p.lambda_tilde();
  Tridiagonal t;
  t.diag.resize(cells - 1);
  t.off.assign(cells - 2, -h2 / (2 * h * h));
  for (int j = 1; j < cells; ++j) {
    const long double r = j * h;
    t.diag[j - 1] = h2 / (h * h) + h2 * lt * (lt + 1) / (2 * r * r) + potential(p, r);
  }
  return t;
}

// R on cell centres (j - 1/2) h with fluxes weighted by r^{d-1}, symmetrized by sqrt(w).
Tridiagonal flux_form(const RadialProblem& p, double r_max, int cells) {
  const long double h = static_cast<long double>(r_max) / cells;
  const long double h2 = p.hbar * p.hbar;
  const int d = p.dim;
  const long double lam = p.lambda;
  auto w = [d](long double r) { return std::pow(r, static_cast<long double>(d - 1)); };
  Tridiagonal t;
  t.diag.resize(cells);
  t.off.resize(cells - 1);
  for (int j = 1; j <= cells; ++j) {
    const long double r = (j - 0.5L) * h;
    const long double wp = w(j * h);
    const long double wm = j == 1 ? (d == 1 ? 1.0L : 0.0L) : w((j - 1) * h);
    t.diag[j - 1] = h2 * (wp + wm) / (2 * h * h * w(r)) + potential(p, r) + h2 * lam * (lam + d - 2) / (2 * r * r);
    if (j < cells) {
      const long double rn = (j + 0.5L) * h;
      t.off[j - 1] = -h2 * wp / (2 * h * h * std::sqrt(w(r) * w(rn)));
    }
  }
  return t;
}

int sturm_count(const Tridiagonal& t, long double x) {
  int count = 0;
  long double q = 1;
  const long double tiny = std::numeric_limits<long double>::min();
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const long double b2 = i == 0 ? 0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0 : b2 / q);
    if (q == 0) q = -tiny;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

void RadialProblem::validate() const {
  if (dim < 1) throw InvalidArgument("radial dimension must be >= 1");
  if (!(hbar > 0)) throw InvalidArgument("hbar must be positive");
  if (kind == RadialKind::KC && !(c0 > 0)) throw InvalidArgument("KC radial problem needs c0 > 0 for bound states");
  if (kind == RadialKind::DSOBlock && !(omega > 0)) throw InvalidArgument("omega must be positive");
  if (lambda < 0) throw InvalidArgument("effective angular parameter must be >= 0");
  if (lambda * (lambda + dim - 2) < -1e-12) throw InvalidArgument("negative effective centrifugal strength");
  if (points < 4) throw InvalidArgument("at least 4 grid points are required");
  if (r_max < 0) throw InvalidArgument("r_max must be positive");
}

double RadialProblem::default_r_max(int levels) const {
  if (kind == RadialKind::KC) {
    const double n_eff = std::max(1.0, levels - 1 + lambda + (dim - 1) / 2.0);
    return 40.0 * n_eff * hbar * hbar / c0;
  }
  return 12.0 * std::sqrt(hbar / omega);
}

std::vector<long double> tridiagonal_eigenvalues(const Vec& diag, const Vec& off, int count) {
  if (diag.empty() || off.size() + 1 != diag.size()) throw InvalidArgument("malformed tridiagonal matrix");
  count = std::min<int>(count, static_cast<int>(diag.size()));
  Tridiagonal t{diag, off};
  long double lo = diag[0];
  long double hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const long double radius = (i > 0 ? std::fabs(off[i - 1]) : 0) + (i < off.size() ? std::fabs(off[i]) : 0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  std::vector<long double> out;
  for (int k = 0; k < count; ++k) {
    long double a = out.empty() ? lo : out.back();
    long double b = hi;
    // Invariant: fewer than k+1 eigenvalues below a, at least k+1 below b.
    if (sturm_count(t, a) >= k + 1) {
      out.push_back(a);
      continue;
    }
    for (int it = 0; it < 400; ++it) {
      const long double mid = a + (b - a) / 2;
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) >= k + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(a + (b - a) / 2);
  }
  return out;
}

RadialSpectrum radial_eigenvalues(const RadialProblem& problem, int count, double ratio_tolerance) {
  problem.validate();
  if (count < 1) throw InvalidArgument("level count must be positive");
  RadialSpectrum out;
  out.r_max = problem.r_max > 0 ? problem.r_max : problem.default_r_max(count);
  out.flux_form = problem.lambda_tilde() < 0;
  std::vector<long double> grids[3];
  for (int g = 0; g < 3; ++g) {
    const int cells = problem.points << g;
    const Tridiagonal t = out.flux_form ? flux_form(problem, out.r_max, cells) : u_form(problem, out.r_max, cells);
    grids[g] = tridiagonal_eigenvalues(t.diag, t.off, count);
  }
  for (int k = 0; k < count; ++k) {
    RadialLevel level;
    if (static_cast<std::size_t>(k) >= grids[0].size()) {
      out.levels.push_back(level);
      continue;
    }
    const long double e1 = grids[0][k];
    const long double e2 = grids[1][k];
    const long double e4 = grids[2][k];
    level.raw[0] = static_cast<double>(e1);
    level.raw[1] = static_cast<double>(e2);
    level.raw[2] = static_cast<double>(e4);
    level.energy = static_cast<double>((4 * e4 - e2) / 3);
    const long double d12 = e1 - e2;
    const long double d24 = e2 - e4;
    const long double floor = 1e-13L * std::max(1.0L, std::fabs(e4));
    if (std::fabs(d12) <= floor && std::fabs(d24) <= floor) {
      level.ratio = 4.0;  // already grid-independent
      level.converged = true;
    } else {
      level.ratio = d24 == 0 ? std::numeric_limits<double>::infinity() : static_cast<double>(d12 / d24);
      level.converged = std::fabs(level.ratio - 4.0) <= ratio_tolerance * 4.0;
    }
    level.one_sided = d12 * d24 >= 0;
    if (problem.points < kMinResolvedPoints) level.converged = false;
    out.levels.push_back(level);
  }
  return out;
}

double effective_lambda(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys, int block) {
  qn.validate(params);
  if (params.kind == Kind::KC) {
    const auto d1 = spectra::delta_kc(1, params, qn.I, phys);
    const auto d2 = spectra::delta_kc(2, params, qn.I, phys);
    return (spectra::Number(qn.l) + (d1 + d2) / spectra::Number(2)).to_double();
  }
  if (block != 1 && block != 2) throw InvalidArgument("DSO block must be 1 or 2");
  const int l = block == 1 ? qn.l1 : qn.l2;
  return (spectra::Number(l) + spectra::Number(2) * spectra::delta_dso(block, params, l, phys)).to_double();
}

OracleComparison oracle_compare(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                const OracleOptions& options) {
  qn.validate(params);
  OracleComparison c;
  c.label = qn.label(params.kind);
  c.formula = spectra::physical_spectrum(params, qn, phys).to_double();

  auto solve = [&](RadialProblem prob, int level) {
    prob.hbar = phys.hbar.to_double();
    prob.c0 = phys.c0.to_double();
    prob.omega = phys.omega.to_double();
    prob.points = options.points;
    prob.r_max = options.r_max;
    return radial_eigenvalues(prob, level + 1, options.ratio_tolerance).levels.at(level);
  };
  auto worse = [](double a, double b) { return std::fabs(a - 4.0) >= std::fabs(b - 4.0) ? a : b; };

  if (params.kind == Kind::KC) {
    RadialProblem prob;
    prob.kind = RadialKind::KC;
    prob.dim = params.dim;
    prob.lambda = effective_lambda(params, qn, phys);
    const RadialLevel lv = solve(prob, qn.n - qn.l - 1);
    c.oracle = lv.energy;
    c.ratio = lv.ratio;
    c.converged = lv.converged;
  } else {
    c.converged = true;
    c.ratio = 4.0;
    for (int block = 1; block <= 2; ++block) {
      RadialProblem prob;
      prob.kind = RadialKind::DSOBlock;
      prob.dim = block == 1 ? params.split : params.dim - params.split;
      prob.lambda = effective_lambda(params, qn, phys, block);
      const RadialLevel lv = solve(prob, block == 1 ? qn.n1 : qn.n2);
      c.block_energies.push_back(lv.energy);
      c.oracle += lv.energy;
      c.ratio = worse(c.ratio, lv.ratio);
      c.converged = c.converged && lv.converged;
    }
  }
  c.relative_error = std::fabs(c.oracle - c.formula) / std::max(std::fabs(c.formula), 1e-300);
  c.within_tolerance = c.converged && c.relative_error <= options.tolerance;
  return c;
}

}  // namespace qsym::oracle
