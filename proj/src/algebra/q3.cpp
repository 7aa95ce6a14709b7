#include "qsym/algebra/q3.hpp"

#include <chrono>

namespace qsym::algebra {

using exact::RadExt;
using model::Kind;
using weyl::anticommutator;
using weyl::commutator;

namespace {

constexpr std::size_t kReportedTerms = 4;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CentralExpr integer(long v) { return Poly(v); }
CentralExpr rational(long num, long den) { return Poly(GScalar::rational(num, den)); }

}  // namespace

Residual Residual::of(std::string name, const DiffOp& op, double seconds) {
  Residual r;
  r.name = std::move(name);
  r.term_count = op.term_count();
  r.coefficient_size = op.coefficient_size();
  r.first_terms = op.describe(kReportedTerms);
  r.seconds = seconds;
  return r;
}

Q3Coefficients q3_coefficients(const model::ModelParams& params) {
  params.validate();
  const long N = params.dim;
  const CentralExpr h2 = hbar_pow(2);
  const CentralExpr h4 = hbar_pow(4);
  const CentralExpr H = central_symbol(Var::H);
  const CentralExpr c0 = param(Var::c0);
  const CentralExpr c1 = param(Var::c1);
  const CentralExpr c2 = param(Var::c2);

  Q3Coefficients q;
  q.alpha = Poly{};
  q.gamma = integer(2) * h2;
  q.delta = Poly{};
  q.a = Poly{};
  if (params.kind == Kind::KC) {
    const CentralExpr J2 = central_symbol(Var::J2);
    q.epsilon = integer((N - 1) * (N - 3)) * h4;
    q.zeta = integer(-4) * (c1 - c2) * h2 * c0;
    q.d = integer(8) * h2 * H;
    q.z = integer(-4) * h2 * J2 * H + integer((N - 1) * (N - 1)) * h4 * H - integer(8) * h2 * (c1 + c2) * H +
          integer(2) * h2 * c0 * c0;
  } else {
    const long n = params.split;
    const CentralExpr Jb = central_symbol(Var::Jb);
    const CentralExpr Kb = central_symbol(Var::Kb);
    const CentralExpr w2 = param(Var::omega) * param(Var::omega);
    q.epsilon = rational(N * (N - 4), 4) * h4;
    q.zeta = -(h2 * Jb * H) + h2 * Kb * H -
             rational(1, 4) * h2 * (integer(8) * c1 - integer(8) * c2 - integer((N - 4) * (N - 2 * n)) * h2) * H;
    q.d = integer(-16) * h2 * w2;
    q.z = integer(2) * h2 * H * H + integer(4) * h2 * w2 * Jb + integer(4) * h2 * w2 * Kb +
          integer(8) * h2 * w2 * (c1 + c2 - rational(n * (N - n), 4) * h2);
  }
  return q;
}

Q3Report verify_q3(const model::Model& m) { return verify_q3(m, q3_coefficients(m.params())); }

Q3Report verify_q3(const model::Model& m, const Q3Coefficients& q) {
  const auto& ring = m.ring();
  const auto ops = CentralOperators::from_model(m);
  auto op = [&](const CentralExpr& e) { return to_operator(e, ops, ring); };
  const DiffOp& A = m.A();
  const DiffOp& B = m.B();

  Stopwatch sw;
  const DiffOp C = commutator(A, B);
  const DiffOp AB = anticommutator(A, B);
  const DiffOp A2 = A * A;
  const DiffOp B2 = B * B;

  DiffOp r1 = commutator(A, C);
  r1 -= op(q.alpha) * A2 + op(q.gamma) * AB + op(q.delta) * A + op(q.epsilon) * B + op(q.zeta);
  Q3Report report;
  report.ac = Residual::of("[A,C] relation", r1, sw.seconds());

  Stopwatch sw2;
  DiffOp r2 = commutator(B, C);
  r2 -= op(q.a) * A2 - op(q.gamma) * B2 - op(q.alpha) * AB + op(q.d) * A - op(q.delta) * B + op(q.z);
  report.bc = Residual::of("[B,C] relation", r2, sw2.seconds());
  return report;
}

DiffOp casimir_generator_form(const model::Model& m) {
  return casimir_generator_form(m, q3_coefficients(m.params()));
}

DiffOp casimir_generator_form(const model::Model& m, const Q3Coefficients& q) {
  const auto& ring = m.ring();
  const auto ops = CentralOperators::from_model(m);
  auto op = [&](const CentralExpr& e) { return to_operator(e, ops, ring); };
  const DiffOp& A = m.A();
  const DiffOp& B = m.B();
  const DiffOp C = commutator(A, B);
  const DiffOp A2 = A * A;
  const DiffOp B2 = B * B;

  DiffOp k = C * C;
  auto add = [&](const CentralExpr& coeff, const auto& build) {
    if (!coeff.is_zero()) k += op(coeff) * build();
  };
  add(-q.alpha, [&] { return anticommutator(A2, B); });
  add(-q.gamma, [&] { return anticommutator(A, B2); });
  add(q.alpha * q.gamma - q.delta, [&] { return anticommutator(A, B); });
  add(q.gamma * q.gamma - q.epsilon, [&] { return B2; });
  add(q.gamma * q.delta - Poly(2) * q.zeta, [&] { return B; });
  add(rational(2, 3) * q.a, [&] { return A2 * A; });
  add(q.d + rational(1, 3) * q.a * q.gamma + q.alpha * q.alpha, [&] { return A2; });
  add(rational(1, 3) * q.a * q.epsilon + q.alpha * q.delta + Poly(2) * q.z, [&] { return A; });
  return k;
}

CentralExpr casimir_central_form(const model::ModelParams& params) {
  params.validate();
  const long N = params.dim;
  const CentralExpr h2 = hbar_pow(2);
  const CentralExpr h4 = hbar_pow(4);
  const CentralExpr H = central_symbol(Var::H);
  const CentralExpr c0 = param(Var::c0);
  const CentralExpr c1 = param(Var::c1);
  const CentralExpr c2 = param(Var::c2);

  if (params.kind == Kind::KC) {
    const CentralExpr J2 = central_symbol(Var::J2);
    return integer(2 * (N - 3) * (N - 1)) * h4 * H * J2 - integer(8) * h2 * (c1 - c2).pow(2) * H +
           integer(4 * (N - 3) * (N - 1)) * (c1 + c2) * h4 * H - integer((N - 3) * (N - 1) * (N - 1)) * hbar_pow(6) * H +
           integer(4) * h2 * c0 * c0 * J2 + integer(8) * h2 * (c1 + c2) * c0 * c0 - integer(2 * (N - 3)) * h4 * c0 * c0;
  }
  const long n = params.split;
  const CentralExpr Jb = central_symbol(Var::Jb);
  const CentralExpr Kb = central_symbol(Var::Kb);
  const CentralExpr w2 = param(Var::omega) * param(Var::omega);
  const CentralExpr H2 = H * H;
  return integer(2) * h2 * Jb * H2 + integer(2) * h2 * Kb * H2 +
         rational(1, 4) * h2 *
             (integer(16) * c1 + integer(16) * c2 - integer(4 * (N - 4) - (N - 2 * n) * (N - 2 * n)) * h2) * H2 +
         h2 * w2 * Jb * Jb + h2 * w2 * Kb * Kb - integer(2) * h2 * w2 * Jb * Kb +
         integer(4) * h2 * w2 * (c1 - c2 - rational((N - 4) * (N - n), 4) * h2) * Jb -
         integer(4) * h2 * w2 * (c1 - c2 + rational(n * (N - 4), 4) * h2) * Kb +
         integer(4) * h2 * w2 *
             ((c1 - c2).pow(2) - rational((N - n) * (N - 4), 2) * h2 * c1 - rational(n * (N - 4), 2) * h2 * c2 +
              rational(n * (N - n) * (N - 4), 4) * h4);
}

Residual verify_casimir(const model::Model& m) {
  Stopwatch sw;
  const auto ops = CentralOperators::from_model(m);
  DiffOp residual = casimir_generator_form(m);
  residual -= to_operator(casimir_central_form(m.params()), ops, m.ring());
  return Residual::of("Casimir central form", residual, sw.seconds());
}

std::vector<Residual> casimir_commutes(const model::Model& m) {
  const DiffOp K = casimir_generator_form(m);
  std::vector<Residual> out;
  Stopwatch sw;
  out.push_back(Residual::of("[K,A]", commutator(K, m.A()), sw.seconds()));
  Stopwatch sw2;
  out.push_back(Residual::of("[K,B]", commutator(K, m.B()), sw2.seconds()));
  return out;
}

std::vector<Residual> integral_checks(const model::Model& m) {
  std::vector<Residual> out;
  const DiffOp& H = m.hamiltonian();
  auto check = [&](const std::string& name, const DiffOp& X) {
    Stopwatch sw;
    out.push_back(Residual::of(name, commutator(H, X), sw.seconds()));
  };
  check("[H,A]", m.A());
  check("[H,B]", m.B());
  if (m.params().kind == Kind::KC) {
    check("[H,J2]", m.J2());
  } else {
    check("[H,J(2)]", m.J2_block());
    check("[H,K(2)]", m.K2_block());
  }
  return out;
}

std::vector<Residual> lie_sector_checks(const model::Model& m) {
  std::vector<Residual> out;
  const auto& ring = m.ring();
  const RadExt i_hbar = RadExt::poly(ring, Poly(GScalar::i(), exact::Monomial::var(Var::hbar)));
  const auto sectors = m.lie_sectors();
  const char* names[] = {"so(N-1) brackets", "so(n) brackets", "so(N-n) brackets"};
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    Stopwatch sw;
    DiffOp total(ring);
    std::size_t failing = 0;
    std::vector<std::string> first;
    auto gen = [&](int i, int j) { return i == j ? DiffOp(ring) : m.angular(i, j); };
    auto delta = [](int a, int b) { return a == b ? 1L : 0L; };
    for (const auto& [i, j] : sectors[s]) {
      for (const auto& [k, l] : sectors[s]) {
        DiffOp expected = GScalar(delta(i, k)) * gen(j, l) + GScalar(delta(j, l)) * gen(i, k) -
                          GScalar(delta(i, l)) * gen(j, k) - GScalar(delta(j, k)) * gen(i, l);
        DiffOp res = commutator(m.angular(i, j), m.angular(k, l)) - i_hbar * expected;
        if (!res.is_zero()) {
          ++failing;
          if (first.size() < kReportedTerms) {
            first.push_back("[L" + std::to_string(i) + std::to_string(j) + ",L" + std::to_string(k) +
                            std::to_string(l) + "]: " + res.describe(1).front());
          }
          total += res;
        }
      }
    }
    const std::string name = m.params().kind == Kind::KC ? names[0] : names[1 + s];
    Residual r = Residual::of(name, total, sw.seconds());
    r.term_count = std::max(r.term_count, failing);
    if (!first.empty()) r.first_terms = first;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Residual> direct_sum_checks(const model::Model& m) {
  std::vector<Residual> out;
  const auto sectors = m.lie_sectors();
  const char* kc_names[] = {"[A,L] and [B,L]"};
  const char* dso_names[] = {"[A,J] and [B,J]", "[A,K] and [B,K]"};
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    Stopwatch sw;
    DiffOp total(m.ring());
    for (const auto& [i, j] : sectors[s]) {
      const DiffOp L = m.angular(i, j);
      total += commutator(m.A(), L);
      total += commutator(m.B(), L);
    }
    const std::string name = m.params().kind == Kind::KC ? kc_names[0] : dso_names[s];
    out.push_back(Residual::of(name, total, sw.seconds()));
  }
  return out;
}

std::vector<Residual> central_checks(const model::Model& m) {
  std::vector<Residual> out;
  const auto ops = CentralOperators::from_model(m);
  std::vector<std::pair<std::string, DiffOp>> central;
  central.emplace_back("H", *ops.H);
  if (ops.J2) central.emplace_back("J2", *ops.J2);
  if (ops.Jb) central.emplace_back("J(2)", *ops.Jb);
  if (ops.Kb) central.emplace_back("K(2)", *ops.Kb);
  for (std::size_t a = 0; a < central.size(); ++a) {
    for (const auto& [gname, g] : {std::pair<std::string, const DiffOp*>{"A", &m.A()}, {"B", &m.B()}}) {
      Stopwatch sw;
      out.push_back(Residual::of("[" + central[a].first + "," + gname + "]", commutator(central[a].second, *g),
                                 sw.seconds()));
    }
    for (std::size_t b = a + 1; b < central.size(); ++b) {
      Stopwatch sw;
      out.push_back(Residual::of("[" + central[a].first + "," + central[b].first + "]",
                                 commutator(central[a].second, central[b].second), sw.seconds()));
    }
  }
  return out;
}

}  // namespace qsym::algebra
