#include "qsym/algebra/central.hpp"

#include <vector>

#include "qsym/exact/errors.hpp"

namespace qsym::algebra {

using exact::Monomial;
using exact::RadExt;

namespace {
constexpr Var kCentral[] = {Var::H, Var::J2, Var::Jb, Var::Kb};
}

CentralExpr central_symbol(Var v) { return Poly::var(v); }
CentralExpr hbar_pow(int e) { return Poly::var(Var::hbar, e); }
CentralExpr param(Var v) { return Poly::var(v); }

CentralOperators CentralOperators::from_model(const model::Model& m) {
  CentralOperators ops;
  ops.H = m.hamiltonian();
  if (m.params().kind == model::Kind::KC) {
    ops.J2 = m.J2();
  } else {
    ops.Jb = m.J2_block();
    ops.Kb = m.K2_block();
  }
  return ops;
}

const DiffOp& CentralOperators::get(Var v) const {
  const std::optional<DiffOp>* slot = nullptr;
  switch (v) {
    case Var::H: slot = &H; break;
    case Var::J2: slot = &J2; break;
    case Var::Jb: slot = &Jb; break;
    case Var::Kb: slot = &Kb; break;
    default: throw InvalidArgument("not a central symbol: " + exact::var_name(exact::slot(v)));
  }
  if (!slot->has_value()) throw InvalidArgument("no operator bound to " + exact::var_name(exact::slot(v)));
  return **slot;
}

DiffOp to_operator(const CentralExpr& e, const CentralOperators& ops, const exact::Ring& ring) {
  // Group terms by their central monomial; the rest is a parameter coefficient.
  std::map<std::vector<int>, std::vector<exact::Term>> groups;
  for (const auto& t : e.terms()) {
    std::vector<int> key;
    Monomial params = t.mono;
    for (Var v : kCentral) {
      key.push_back(t.mono.exponent(v));
      params = params.with_exponent(exact::slot(v), 0);
    }
    groups[key].push_back({params, t.coeff});
  }

  std::map<std::pair<Var, int>, DiffOp> powers;
  auto power = [&](Var v, int k) -> const DiffOp& {
    for (int j = 1; j <= k; ++j) {
      if (powers.count({v, j}) != 0) continue;
      DiffOp p = j == 1 ? ops.get(v) : powers.at({v, j - 1}) * ops.get(v);
      powers.emplace(std::make_pair(v, j), std::move(p));
    }
    return powers.at({v, k});
  };

  DiffOp out(ring);
  for (auto& [key, terms] : groups) {
    DiffOp op = DiffOp::identity(ring);
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (key[k] > 0) op = op * power(kCentral[k], key[k]);
    }
    const RadExt coeff = RadExt::poly(ring, Poly::from_terms(terms));
    out += coeff * op;
  }
  return out;
}

GScalar evaluate(const CentralExpr& e, const std::map<Var, GScalar>& values) {
  GScalar total;
  for (const auto& t : e.terms()) {
    GScalar v = t.coeff;
    for (int s = 0; s < exact::kNumVars; ++s) {
      const int k = t.mono.exponent(s);
      if (k == 0) continue;
      auto it = values.find(static_cast<Var>(s));
      if (it == values.end()) throw InvalidArgument("no value for symbol " + exact::var_name(s));
      for (int j = 0; j < k; ++j) v *= it->second;
    }
    total += v;
  }
  return total;
}

bool uses_only(const CentralExpr& e, std::initializer_list<Var> central) {
  for (Var v : kCentral) {
    bool allowed = false;
    for (Var c : central) allowed = allowed || c == v;
    if (!allowed && e.depends_on(exact::slot(v))) return false;
  }
  for (int s = exact::coord_slot(0); s < exact::kNumVars; ++s) {
    if (e.depends_on(s)) return false;
  }
  return true;
}

}  // namespace qsym::algebra
