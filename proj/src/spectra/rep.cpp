#include "qsym/spectra/rep.hpp"

#include <algorithm>
#include <set>

#include "qsym/exact/errors.hpp"

namespace qsym::spectra {

namespace {

// Float values below this fraction of their natural scale count as zero.
const Real kZeroFraction("1e-40");

constexpr int kSigns[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

int robust_sign(const Number& v, const Real& scale) {
  if (v.exact()) return v.sign();
  if (boost::multiprecision::abs(v.real()) <= kZeroFraction * scale) return 0;
  return v.sign();
}

Real magnitude(const Number& v) { return boost::multiprecision::abs(v.real()); }

Number power(const Number& x, int e) {
  Number out(1);
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

Number half(const Number& x) { return x / Number(2); }

// Roots of Phi as a_i + b_i t with t = c0/(hbar sqrt(-2E)) (KC) or E/(2 hbar omega) (DSO).
std::array<Number, 6> roots(Kind kind, const MParams& m, const Number& t) {
  std::array<Number, 6> nu;
  for (int i = 0; i < 4; ++i) {
    const Number shift = Number(kSigns[i][0]) * m.m1 + Number(kSigns[i][1]) * m.m2;
    nu[i] = kind == Kind::KC ? half(Number(1) + shift) : (Number(2) + shift) / Number(4);
  }
  nu[4] = Number::rational(1, 2) + t;
  nu[5] = Number::rational(1, 2) - t;
  return nu;
}

constexpr int kSlope[6] = {0, 0, 0, 0, 1, -1};

Number nu0_for(Kind kind, const PhysicalParams& phys, const Number& energy) {
  const Number h18 = power(phys.hbar, 18);
  if (kind == Kind::KC) return Number(6291456) * energy * h18;
  return Number(-12582912) * h18 * phys.omega * phys.omega;
}

Number energy_from_t(Kind kind, const PhysicalParams& phys, const Number& t) {
  if (kind == Kind::KC) return -(phys.c0 * phys.c0) / (Number(2) * phys.hbar * phys.hbar * t * t);
  return Number(2) * phys.hbar * phys.omega * t;
}

Number t_from_energy(Kind kind, const PhysicalParams& phys, const Number& energy) {
  if (kind == Kind::KC) return phys.c0 / (phys.hbar * sqrt(Number(-2) * energy));
  return energy / (Number(2) * phys.hbar * phys.omega);
}

Real phi_scale(const StructureFunction& phi, const Number& x) {
  Real s = magnitude(phi.nu0);
  for (const auto& nu : phi.nu) s *= magnitude(x) + magnitude(phi.u) + magnitude(nu) + 1;
  return s;
}

bool continuous_positive(const StructureFunction& phi, int p) {
  const Number top(p + 1);
  const Real scale = Real(p + 1) + magnitude(phi.u);
  for (const auto& z : phi.zeros()) {
    const Real zs = scale + magnitude(z);
    if (robust_sign(z, zs) > 0 && robust_sign(z - top, zs) < 0) return false;
  }
  const Number mid = Number::rational(p + 1, 2);
  return robust_sign(phi(mid), phi_scale(phi, mid)) > 0;
}

Number block_dim(const ModelParams& params, int i) { return Number(i == 1 ? params.split : params.dim - params.split); }

}  // namespace

void PhysicalParams::validate() const {
  if (hbar.sign() <= 0) throw InvalidArgument("hbar must be positive");
  if (omega.sign() <= 0) throw InvalidArgument("omega must be positive");
  if (c0.sign() < 0) throw InvalidArgument("c0 must be nonnegative");
  if (c1.sign() < 0 || c2.sign() < 0) throw InvalidArgument("c1 and c2 must be nonnegative");
}

Number so_casimir_eigenvalue(int I, int M, const Number& hbar) {
  if (I < 0) throw InvalidArgument("angular label must be nonnegative");
  if (M < 1) throw InvalidArgument("so(M) rank must be positive");
  return hbar * hbar * Number(static_cast<long>(I) * (I + M - 2));
}

MParams m_parameters(const ModelParams& params, const AngularLabels& labels, const PhysicalParams& phys,
                     MNormalization norm) {
  params.validate();
  phys.validate();
  const Number h2 = phys.hbar * phys.hbar;
  auto root = [](const Number& radicand) {
    if (radicand.sign() < 0) throw DomainError("negative m-parameter radicand " + radicand.decimal());
    return sqrt(radicand);
  };
  MParams m;
  if (params.kind == Kind::KC) {
    const long N = params.dim;
    const Number j2 = so_casimir_eigenvalue(labels.I, params.dim - 1, phys.hbar) / h2;
    const Number base = Number(4) * j2 + Number((N - 3) * (N - 3));
    Number r1 = Number(16) * phys.c1_reduced() + base;
    Number r2 = Number(16) * phys.c2_reduced() + base;
    if (norm == MNormalization::Adopted) {
      r1 /= Number(4);
      r2 /= Number(4);
    }
    m.m1 = root(r1);
    m.m2 = root(r2);
  } else {
    const long n = params.split;
    const long N = params.dim;
    const Number j = so_casimir_eigenvalue(labels.l1, params.split, phys.hbar) / h2;
    const Number k = so_casimir_eigenvalue(labels.l2, params.dim - params.split, phys.hbar) / h2;
    m.m1 = root(Number(8) * phys.c1_reduced() + Number(4) * j + Number((n - 2) * (n - 2)));
    m.m2 = root(Number(8) * phys.c2_reduced() + Number(4) * k + Number((N - n - 2) * (N - n - 2)));
  }
  return m;
}

Number StructureFunction::operator()(const Number& x) const {
  Number v = nu0;
  for (const auto& n : nu) v *= x + u - n;
  return v;
}

std::array<Number, 6> StructureFunction::zeros() const {
  std::array<Number, 6> z;
  for (int i = 0; i < 6; ++i) z[i] = nu[i] - u;
  return z;
}

StructureFunction structure_function(const ModelParams& params, const MParams& m, const PhysicalParams& phys,
                                     const Number& u, const Number& energy) {
  params.validate();
  phys.validate();
  if (params.kind == Kind::KC && energy.sign() >= 0) {
    throw DomainError("KC structure function needs a bound energy E < 0, got " + energy.decimal());
  }
  StructureFunction phi;
  phi.kind = params.kind;
  phi.nu0 = nu0_for(params.kind, phys, energy);
  phi.nu = roots(params.kind, m, t_from_energy(params.kind, phys, energy));
  phi.u = u;
  phi.energy = energy;
  return phi;
}

std::string Branch::label() const {
  std::string s = "u=nu" + std::to_string(zero_root) + ",top=nu" + std::to_string(top_root);
  if (eps1 != 0) {
    s += std::string(",eps=(") + (eps1 > 0 ? "+" : "-") + "," + (eps2 > 0 ? "+" : "-") + ")";
  }
  return s;
}

std::vector<RepSolution> enumerate_reps(const ModelParams& params, const MParams& m, int p,
                                        const PhysicalParams& phys) {
  params.validate();
  phys.validate();
  if (p < 0 || p > kMaxRepDimension) {
    throw InvalidArgument("p must lie in [0, " + std::to_string(kMaxRepDimension) + "]");
  }
  std::vector<RepSolution> out;
  // Without attraction there is no bound sector.
  if (params.kind == Kind::KC && phys.c0.is_zero()) return out;

  const std::array<Number, 6> a = roots(params.kind, m, Number(0));
  const Number top(p + 1);
  for (int i0 = 0; i0 < 6; ++i0) {
    for (int i1 = 0; i1 < 6; ++i1) {
      const int db = kSlope[i1] - kSlope[i0];
      if (i1 == i0 || db == 0) continue;
      const Number t = (top - (a[i1] - a[i0])) / Number(db);
      if (params.kind == Kind::KC) {
        const Real scale = Real(p + 1) + magnitude(a[i0]) + magnitude(a[i1]);
        if (robust_sign(t, scale) <= 0) continue;
      }
      RepSolution rep;
      rep.p = p;
      rep.energy = energy_from_t(params.kind, phys, t);
      rep.phi.kind = params.kind;
      rep.phi.nu0 = nu0_for(params.kind, phys, rep.energy);
      rep.phi.nu = roots(params.kind, m, t);
      rep.phi.u = rep.phi.nu[i0];
      rep.phi.energy = rep.energy;
      rep.u = rep.phi.u;
      rep.branch.zero_root = i0 + 1;
      rep.branch.top_root = i1 + 1;
      const int signed_root = i0 < 4 ? i0 : (i1 < 4 ? i1 : -1);
      if (signed_root >= 0) {
        rep.branch.eps1 = kSigns[signed_root][0];
        rep.branch.eps2 = kSigns[signed_root][1];
      }
      rep.integer_positive = true;
      for (int k = 1; k <= p; ++k) {
        const Number x(k);
        const Number v = rep.phi(x);
        rep.phi_values.push_back(v);
        if (robust_sign(v, phi_scale(rep.phi, x)) <= 0) rep.integer_positive = false;
      }
      if (!rep.integer_positive) continue;
      rep.continuous_positive = continuous_positive(rep.phi, p);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

int surviving_zero_roots(const std::vector<RepSolution>& reps) {
  std::set<int> roots_seen;
  for (const auto& r : reps) {
    if (r.branch.zero_root >= 1 && r.branch.zero_root <= 4) roots_seen.insert(r.branch.zero_root);
  }
  return static_cast<int>(roots_seen.size());
}

QuantumNumbers QuantumNumbers::kc(int n, int I, int l) {
  QuantumNumbers q;
  q.n = n;
  q.I = I;
  q.l = l;
  return q;
}

QuantumNumbers QuantumNumbers::dso(int n1, int n2, int l1, int l2) {
  QuantumNumbers q;
  q.n1 = n1;
  q.n2 = n2;
  q.l1 = l1;
  q.l2 = l2;
  return q;
}

void QuantumNumbers::validate(const ModelParams& params) const {
  if (params.kind == Kind::KC) {
    if (n < 1) throw InvalidArgument("KC principal number n must be >= 1");
    if (I < 0 || l < I || l > n - 1) throw InvalidArgument("KC labels need 0 <= I <= l <= n-1");
    return;
  }
  if (n1 < 0 || n2 < 0 || l1 < 0 || l2 < 0) throw InvalidArgument("DSO quantum numbers must be nonnegative");
  if (params.split == 1 && l1 != 0) throw InvalidArgument("a one-dimensional block has l = 0");
  if (params.dim - params.split == 1 && l2 != 0) throw InvalidArgument("a one-dimensional block has l = 0");
}

int QuantumNumbers::p(Kind kind) const { return kind == Kind::KC ? n - 1 - I : n1 + n2; }

AngularLabels QuantumNumbers::angular(Kind kind) const {
  AngularLabels a;
  if (kind == Kind::KC) {
    a.I = I;
  } else {
    a.l1 = l1;
    a.l2 = l2;
  }
  return a;
}

std::string QuantumNumbers::label(Kind kind) const {
  if (kind == Kind::KC) return "n=" + std::to_string(n) + " I=" + std::to_string(I) + " l=" + std::to_string(l);
  return "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " l1=" + std::to_string(l1) +
         " l2=" + std::to_string(l2);
}

Number delta_kc(int i, const ModelParams& params, int I, const PhysicalParams& phys) {
  const Number shift = Number::rational(params.dim - 3, 2);
  const Number c = i == 1 ? phys.c1_reduced() : phys.c2_reduced();
  const Number base = Number(I) + shift;
  return sqrt(base * base + Number(4) * c) - shift - Number(I);
}

Number delta_dso(int i, const ModelParams& params, int l, const PhysicalParams& phys) {
  const Number shift = (block_dim(params, i) - Number(2)) / Number(4);
  const Number c = i == 1 ? phys.c1_reduced() : phys.c2_reduced();
  const Number base = half(Number(l)) + shift;
  return sqrt(base * base + half(c)) - shift - half(Number(l));
}

Number alpha_dso(int i, const ModelParams& params, int l, const PhysicalParams& phys) {
  return Number(2) * delta_dso(i, params, l, phys) + Number(l) + half(block_dim(params, i) - Number(2));
}

Number physical_spectrum_kc(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys) {
  params.validate();
  phys.validate();
  qn.validate(params);
  const Number d1 = delta_kc(1, params, qn.I, phys);
  const Number d2 = delta_kc(2, params, qn.I, phys);
  const Number denom = Number(qn.n) + half(d1 + d2) + Number::rational(params.dim - 3, 2);
  return -(phys.c0 * phys.c0) / (Number(2) * phys.hbar * phys.hbar * denom * denom);
}

Number physical_spectrum_dso(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys) {
  params.validate();
  phys.validate();
  qn.validate(params);
  const Number a1 = alpha_dso(1, params, qn.l1, phys);
  const Number a2 = alpha_dso(2, params, qn.l2, phys);
  return Number(2) * phys.hbar * phys.omega * (Number(qn.n1 + qn.n2 + 1) + half(a1 + a2));
}

Number physical_spectrum(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys) {
  return params.kind == Kind::KC ? physical_spectrum_kc(params, qn, phys) : physical_spectrum_dso(params, qn, phys);
}

MatchVerdict match_identification(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                  const std::vector<RepSolution>& candidates, double tol) {
  MatchVerdict v;
  v.physical = physical_spectrum(params, qn, phys);
  std::optional<Real> best;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Number& e = candidates[k].energy;
    const Number diff = e - v.physical;
    const bool exact_equal = diff.exact() && diff.is_zero();
    const Real rel = relative_difference(e, v.physical);
    if (exact_equal) {
      v.index = k;
      v.relative_error = 0;
      v.exact = true;
      break;
    }
    if (!best || rel < *best) {
      best = rel;
      v.index = k;
      v.relative_error = rel;
    }
  }
  if (!v.index) return v;
  const RepSolution& chosen = candidates[*v.index];
  v.algebraic = chosen.energy;
  v.branch = chosen.branch;
  v.matched = v.exact || v.relative_error <= Real(tol);
  return v;
}

MatchVerdict identify(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                      MNormalization norm, double tol) {
  qn.validate(params);
  const MParams m = m_parameters(params, qn.angular(params.kind), phys, norm);
  const auto reps = enumerate_reps(params, m, qn.p(params.kind), phys);
  return match_identification(params, qn, phys, reps, tol);
}

OscillatorRep build_oscillator_rep(const RepSolution& rep) {
  for (int k = 1; k <= rep.p; ++k) {
    const Number x(k);
    const Number v = rep.phi(x);
    if (robust_sign(v, phi_scale(rep.phi, x)) <= 0) {
      throw DomainError("Phi(" + std::to_string(k) + ") = " + v.decimal() + " is not positive; no unitary module");
    }
  }
  OscillatorRep o;
  o.dim = rep.p + 1;
  const auto cells = static_cast<std::size_t>(o.dim) * static_cast<std::size_t>(o.dim);
  o.aleph.assign(cells, Number(0));
  o.b.assign(cells, Number(0));
  o.b_dagger.assign(cells, Number(0));
  for (int k = 0; k < o.dim; ++k) o.aleph[k * o.dim + k] = Number(k);
  for (int k = 0; k + 1 < o.dim; ++k) {
    const Number s = sqrt(rep.phi(Number(k + 1)));
    o.b_dagger[(k + 1) * o.dim + k] = s;
    o.b[k * o.dim + k + 1] = s;
  }
  return o;
}

Real OscillatorCheck::max() const { return std::max({aleph_b_dagger, aleph_b, b_b_dagger, b_dagger_b}); }

OscillatorCheck check_oscillator_relations(const OscillatorRep& rep, const StructureFunction& phi) {
  const int n = rep.dim;
  using Matrix = std::vector<Number>;
  auto mul = [n](const Matrix& x, const Matrix& y) {
    Matrix z(x.size(), Number(0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const Number& xik = x[i * n + k];
        if (xik.exact() && xik.is_zero()) continue;
        for (int j = 0; j < n; ++j) z[i * n + j] += xik * y[k * n + j];
      }
    }
    return z;
  };
  auto diag = [n](auto f) {
    Matrix z(static_cast<std::size_t>(n) * n, Number(0));
    for (int k = 0; k < n; ++k) z[k * n + k] = f(k);
    return z;
  };

  Real scale = 1;
  for (int k = 0; k <= n; ++k) scale = std::max(scale, magnitude(phi(Number(k))));

  bool all_exact = true;
  auto residual = [&](const Matrix& lhs, const Matrix& rhs) {
    Real worst = 0;
    for (std::size_t c = 0; c < lhs.size(); ++c) {
      const Number d = lhs[c] - rhs[c];
      if (d.exact() && d.is_zero()) continue;
      all_exact = false;
      worst = std::max(worst, magnitude(d) / scale);
    }
    return worst;
  };
  auto sub = [](Matrix x, const Matrix& y) {
    for (std::size_t c = 0; c < x.size(); ++c) x[c] -= y[c];
    return x;
  };

  OscillatorCheck out;
  out.aleph_b_dagger = residual(sub(mul(rep.aleph, rep.b_dagger), mul(rep.b_dagger, rep.aleph)), rep.b_dagger);
  Matrix minus_b = rep.b;
  for (auto& v : minus_b) v = -v;
  out.aleph_b = residual(sub(mul(rep.aleph, rep.b), mul(rep.b, rep.aleph)), minus_b);
  out.b_b_dagger = residual(mul(rep.b, rep.b_dagger), diag([&](int k) { return phi(Number(k + 1)); }));
  out.b_dagger_b = residual(mul(rep.b_dagger, rep.b), diag([&](int k) { return phi(Number(k)); }));
  out.exact = all_exact;
  return out;
}

}  // namespace qsym::spectra
