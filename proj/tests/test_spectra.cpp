#include <catch_amalgamated.hpp>

#include "qsym/exact/errors.hpp"
#include "qsym/spectra/rep.hpp"

using namespace qsym;
using namespace qsym::spectra;

namespace {

Number q(long n, long d = 1) { return Number::rational(n, d); }

bool has_energy(const std::vector<RepSolution>& reps, const Number& e) {
  for (const auto& r : reps) {
    if (r.energy.exact() && e.exact() && r.energy.rational() == e.rational()) return true;
  }
  return false;
}

std::vector<Number> matmul(const OscillatorRep& rep, const std::vector<Number>& a, const std::vector<Number>& b) {
  std::vector<Number> out(a.size());
  for (int i = 0; i < rep.dim; ++i) {
    for (int j = 0; j < rep.dim; ++j) {
      Number s;
      for (int k = 0; k < rep.dim; ++k) s += rep.at(a, i, k) * rep.at(b, k, j);
      out[i * rep.dim + j] = s;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("numbers parse exactly", "[spectra]") {
  CHECK(Number::parse("0.125").rational() == mpq_class(1, 8));
  CHECK(Number::parse("-1/4").rational() == mpq_class(-1, 4));
  CHECK(Number::parse("2.5e-3").rational() == mpq_class(1, 400));
  CHECK_THROWS_AS(Number::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Number::parse("1/0"), InvalidArgument);
  CHECK(sqrt(q(9, 4)).rational() == mpq_class(3, 2));
  CHECK_FALSE(sqrt(q(2)).exact());
  CHECK(relative_difference(sqrt(q(2)) * sqrt(q(2)), q(2)) < Real("1e-45"));
  CHECK_THROWS_AS(sqrt(q(-1)), DomainError);
}

TEST_CASE("so(M) Casimir eigenvalues", "[spectra]") {
  CHECK(so_casimir_eigenvalue(0, 5).is_zero());
  CHECK(so_casimir_eigenvalue(1, 3).rational() == 2);
  CHECK(so_casimir_eigenvalue(2, 4).rational() == 8);
  CHECK(so_casimir_eigenvalue(1, 3, q(1, 2)).rational() == mpq_class(1, 2));
}

TEST_CASE("m parameters", "[spectra]") {
  PhysicalParams phys;
  const auto kc = m_parameters(ModelParams::kc(3), {2, 0, 0}, phys);
  CHECK(kc.m1.rational() == 2);
  CHECK(kc.m2.rational() == 2);
  CHECK(m_parameters(ModelParams::kc(3), {2, 0, 0}, phys, MNormalization::Footnote).m1.rational() == 4);

  const auto dso = m_parameters(ModelParams::dso(4, 2), {0, 1, 0}, phys);
  CHECK(dso.m1.rational() == 2);
  CHECK(alpha_dso(1, ModelParams::dso(4, 2), 1, phys).rational() == 1);

  phys.c1 = q(1);
  const auto s = m_parameters(ModelParams::dso(4, 2), {0, 0, 0}, phys);
  CHECK_FALSE(s.m1.exact());
  CHECK(relative_difference(s.m1, Number(2) * sqrt(q(2))) < Real("1e-45"));
}

TEST_CASE("structure function examples", "[spectra]") {
  PhysicalParams phys;
  const MParams zero{q(0), q(0)};
  const auto kc = structure_function(ModelParams::kc(3), zero, phys, q(1, 2), q(-1, 2));
  for (long x : {-2L, 2L, 3L, 5L}) {
    const Number xx(x);
    CHECK((kc(xx) - Number(6291456) * q(-1, 2) * xx * xx * xx * xx * (xx - 1) * (xx + 1)).is_zero());
  }
  const auto dso = structure_function(ModelParams::dso(4, 2), zero, phys, q(1, 2), q(2));
  for (long x : {-1L, 2L, 4L}) {
    const Number xx(x);
    CHECK((dso(xx) - Number(-12582912) * xx * xx * xx * xx * (xx - 1) * (xx + 1)).is_zero());
  }
  CHECK_THROWS_AS(structure_function(ModelParams::kc(3), zero, phys, q(1, 2), q(1)), DomainError);
}

TEST_CASE("hydrogen representations", "[spectra]") {
  PhysicalParams phys;
  const auto params = ModelParams::kc(3);
  const auto m = m_parameters(params, {0, 0, 0}, phys);
  const auto p0 = enumerate_reps(params, m, 0, phys);
  CHECK(has_energy(p0, q(-1, 2)));
  const auto p1 = enumerate_reps(params, m, 1, phys);
  REQUIRE(has_energy(p1, q(-1, 8)));
  for (const auto& r : p1) {
    if (r.energy.exact() && r.energy.rational() == mpq_class(-1, 8)) CHECK(r.phi_values.at(0).rational() == 2359296);
  }
  const int survivors = surviving_zero_roots(p1);
  UNSCOPED_INFO("hydrogen p=1 surviving zero roots: " << survivors);
  CHECK(survivors == 4);

  PhysicalParams free = phys;
  free.c0 = q(0);
  CHECK(enumerate_reps(params, m, 1, free).empty());
  CHECK_THROWS_AS(enumerate_reps(params, m, kMaxRepDimension + 1, phys), InvalidArgument);
}

TEST_CASE("DSO ground representation", "[spectra]") {
  PhysicalParams phys;
  const auto params = ModelParams::dso(4, 2);
  const auto reps = enumerate_reps(params, m_parameters(params, {0, 0, 0}, phys), 0, phys);
  bool found = false;
  for (const auto& r : reps) {
    if (r.branch.zero_root <= 4 && r.branch.top_root == 5 && r.energy.exact() && r.energy.rational() == 2) {
      found = found || r.u.rational() == mpq_class(1, 2);
    }
  }
  CHECK(found);
}

TEST_CASE("physical spectra", "[spectra]") {
  PhysicalParams phys;
  CHECK(physical_spectrum(ModelParams::kc(3), QuantumNumbers::kc(1, 0, 0), phys).rational() == mpq_class(-1, 2));
  CHECK(physical_spectrum(ModelParams::kc(5), QuantumNumbers::kc(1, 0, 0), phys).rational() == mpq_class(-1, 8));
  CHECK(physical_spectrum(ModelParams::dso(4, 2), QuantumNumbers::dso(0, 0, 0, 0), phys).rational() == 2);
  PhysicalParams c1 = phys;
  c1.c1 = q(2);
  const Number e = physical_spectrum(ModelParams::kc(3), QuantumNumbers::kc(1, 0, 0), c1);
  const Number s2 = sqrt(q(2));
  CHECK(relative_difference(e, q(-1) / (Number(2) * (Number(1) + s2) * (Number(1) + s2))) < Real("1e-45"));
  c1.c1 = q(1);
  const Number d = physical_spectrum(ModelParams::dso(5, 2), QuantumNumbers::dso(0, 0, 0, 0), c1);
  CHECK(relative_difference(d, Number(2) * (Number(1) + (s2 + q(1, 2)) / Number(2))) < Real("1e-45"));
  CHECK_THROWS_AS(QuantumNumbers::kc(2, 2, 0).validate(ModelParams::kc(3)), InvalidArgument);
  CHECK_THROWS_AS(QuantumNumbers::dso(0, 0, 1, 0).validate(ModelParams::dso(3, 1)), InvalidArgument);
}

TEST_CASE("identification", "[spectra]") {
  PhysicalParams phys;
  for (int n = 1; n <= 4; ++n) {
    for (int I = 0; I <= std::min(2, n - 1); ++I) {
      for (int l = I; l <= std::min(2, n - 1); ++l) {
        const auto v = identify(ModelParams::kc(3), QuantumNumbers::kc(n, I, l), phys);
        INFO("n=" << n << " I=" << I << " l=" << l);
        CHECK(v.matched);
        CHECK(v.exact);
      }
    }
  }
  for (int p = 0; p <= 3; ++p) {
    const auto v = identify(ModelParams::dso(4, 2), QuantumNumbers::dso(p, 0, 0, 0), phys);
    CHECK(v.matched);
    CHECK(v.branch.top_root == 5);
  }
  // Enumerating at the wrong p cannot reproduce the physical energy.
  const auto params = ModelParams::dso(4, 2);
  const auto qn = QuantumNumbers::dso(1, 0, 0, 0);
  const auto wrong = enumerate_reps(params, m_parameters(params, qn.angular(params.kind), phys), 2, phys);
  CHECK_FALSE(match_identification(params, qn, phys, wrong).matched);
}

TEST_CASE("every enumerated rep vanishes at 0 and p+1 and is positive between", "[spectra][property]") {
  PhysicalParams phys;
  phys.c1 = q(1);
  phys.c2 = q(2);
  for (const auto& params : {ModelParams::kc(3), ModelParams::kc(4), ModelParams::dso(4, 2), ModelParams::dso(5, 2)}) {
    for (int p = 0; p <= 3; ++p) {
      const auto m = m_parameters(params, {1, 1, 1}, phys);
      for (const auto& r : enumerate_reps(params, m, p, phys)) {
        const Real scale = (abs(r.phi.nu0) + abs(r.phi(Number(p + 2)))).real();
        CHECK(abs(r.phi(Number(0))).real() <= Real("1e-35") * scale);
        CHECK(abs(r.phi(Number(p + 1))).real() <= Real("1e-35") * scale);
        for (const auto& v : r.phi_values) CHECK(v.sign() > 0);
        if (params.kind == model::Kind::KC) CHECK(r.energy.sign() < 0);
      }
    }
  }
}

TEST_CASE("energies are monotone in p", "[spectra][property]") {
  PhysicalParams phys;
  phys.c1 = q(2);
  phys.c2 = q(1);
  Number prev = physical_spectrum(ModelParams::kc(4), QuantumNumbers::kc(1, 0, 0), phys);
  for (int n = 2; n <= 6; ++n) {
    const Number e = physical_spectrum(ModelParams::kc(4), QuantumNumbers::kc(n, 0, 0), phys);
    CHECK(e > prev);
    CHECK(e.sign() < 0);
    prev = e;
  }
  const auto params = ModelParams::dso(5, 2);
  for (int p = 0; p < 5; ++p) {
    const Number e0 = physical_spectrum(params, QuantumNumbers::dso(p, 0, 1, 0), phys);
    const Number e1 = physical_spectrum(params, QuantumNumbers::dso(p + 1, 0, 1, 0), phys);
    CHECK(relative_difference(e1 - e0, Number(2)) < Real("1e-45"));
    CHECK(e0.sign() > 0);
  }
}

TEST_CASE("oscillator matrices", "[spectra]") {
  PhysicalParams phys;
  const auto params = ModelParams::kc(3);
  const auto m = m_parameters(params, {0, 0, 0}, phys);
  const auto v1 = identify(params, QuantumNumbers::kc(2, 0, 0), phys);
  const auto reps1 = enumerate_reps(params, m, 1, phys);
  REQUIRE(v1.index);
  const auto rep1 = build_oscillator_rep(reps1[*v1.index]);
  const auto bdb = matmul(rep1, rep1.b_dagger, rep1.b);
  CHECK(bdb[0].is_zero());
  CHECK(bdb[3].rational() == 2359296);
  CHECK(bdb[1].is_zero());
  CHECK(bdb[2].is_zero());

  const auto reps0 = enumerate_reps(params, m, 0, phys);
  const auto rep0 = build_oscillator_rep(reps0.front());
  CHECK(rep0.b.front().is_zero());
  CHECK(rep0.b_dagger.front().is_zero());
  CHECK(check_oscillator_relations(rep0, reps0.front().phi).exact);

  const auto v2 = identify(params, QuantumNumbers::kc(3, 0, 0), phys);
  const auto reps2 = enumerate_reps(params, m, 2, phys);
  const auto& r2 = reps2[*v2.index];
  const auto check = check_oscillator_relations(build_oscillator_rep(r2), r2.phi);
  CHECK(check.aleph_b_dagger == 0);
  CHECK(check.max() <= Real("1e-13"));

  RepSolution bad = r2;
  bad.phi_values[0] = -bad.phi_values[0];
  bad.phi.nu0 = -bad.phi.nu0;
  CHECK_THROWS_AS(build_oscillator_rep(bad), DomainError);
}

TEST_CASE("footnote m normalization breaks the KC spectrum", "[spectra]") {
  PhysicalParams phys;
  phys.c1 = q(1);
  const auto qn = QuantumNumbers::kc(2, 0, 0);
  CHECK(identify(ModelParams::kc(3), qn, phys, MNormalization::Adopted).matched);
  CHECK_FALSE(identify(ModelParams::kc(3), qn, phys, MNormalization::Footnote).matched);
}
