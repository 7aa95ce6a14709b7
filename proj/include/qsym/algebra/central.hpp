#pragma once

#include <map>
#include <optional>
#include <string>

#include "qsym/exact/poly.hpp"
#include "qsym/model/model.hpp"

namespace qsym::algebra {

using exact::GScalar;
using exact::Poly;
using exact::Var;
using weyl::DiffOp;

/// Polynomial in the commuting central symbols {H, J2, Jb, Kb} whose
/// coefficients are polynomials in {hbar, c0, c1, c2, omega}.
using CentralExpr = Poly;

CentralExpr central_symbol(Var v);
CentralExpr hbar_pow(int e);
CentralExpr param(Var v);

/// Operators substituted for central symbols.
struct CentralOperators {
  std::optional<DiffOp> H;
  std::optional<DiffOp> J2;
  std::optional<DiffOp> Jb;
  std::optional<DiffOp> Kb;

  static CentralOperators from_model(const model::Model& m);
  const DiffOp& get(Var v) const;
};

/// Route (i): replaces each central symbol by its operator; parameter
/// coefficients multiply from the left.
DiffOp to_operator(const CentralExpr& e, const CentralOperators& ops, const exact::Ring& ring);

/// Route (ii): substitutes exact values for every symbol present.
GScalar evaluate(const CentralExpr& e, const std::map<Var, GScalar>& values);

/// True if the expression uses only the given central symbols (params always allowed).
bool uses_only(const CentralExpr& e, std::initializer_list<Var> central);

}  // namespace qsym::algebra
