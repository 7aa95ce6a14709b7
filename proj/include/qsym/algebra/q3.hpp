#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/algebra/central.hpp"

namespace qsym::algebra {

/// Structure constants of
///   [A,B] = C,
///   [A,C] = alpha A^2 + gamma {A,B} + delta A + epsilon B + zeta,
///   [B,C] = a A^2 - gamma B^2 - alpha {A,B} + d A - delta B + z.
struct Q3Coefficients {
  CentralExpr alpha, gamma, delta, epsilon, zeta, a, d, z;
};

/// Tabulated constants for the model at its concrete dimension.
Q3Coefficients q3_coefficients(const model::ModelParams& params);

/// Outcome of one exact identity check: the canonical residual operator is
/// summarized by its term count and the first few offending terms.
struct Residual {
  std::string name;
  std::size_t term_count = 0;
  std::size_t coefficient_size = 0;
  std::vector<std::string> first_terms;
  double seconds = 0.0;

  bool zero() const { return term_count == 0; }
  static Residual of(std::string name, const DiffOp& op, double seconds = 0.0);
};

struct Q3Report {
  Residual ac;  // [A,C] relation
  Residual bc;  // [B,C] relation
  bool verified() const { return ac.zero() && bc.zero(); }
};

Q3Report verify_q3(const model::Model& m);
Q3Report verify_q3(const model::Model& m, const Q3Coefficients& coeffs);

/// K = C^2 - alpha{A^2,B} - gamma{A,B^2} + (alpha gamma - delta){A,B} + (gamma^2 - epsilon)B^2
///     + (gamma delta - 2 zeta)B + (2a/3)A^3 + (d + a gamma/3 + alpha^2)A^2 + (a epsilon/3 + alpha delta + 2z)A
DiffOp casimir_generator_form(const model::Model& m);
DiffOp casimir_generator_form(const model::Model& m, const Q3Coefficients& coeffs);

/// The Casimir written in central elements only.
CentralExpr casimir_central_form(const model::ModelParams& params);

Residual verify_casimir(const model::Model& m);

/// [K, A] and [K, B].
std::vector<Residual> casimir_commutes(const model::Model& m);

/// [H, A], [H, B] and [H, central] for every Lie-sector Casimir.
std::vector<Residual> integral_checks(const model::Model& m);
/// [L_ij, L_kl] against the so(k) structure constants, one residual per sector.
std::vector<Residual> lie_sector_checks(const model::Model& m);
/// [A, L_ij] and [B, L_ij] for every sector generator.
std::vector<Residual> direct_sum_checks(const model::Model& m);
/// Central symbols commute with A, B and with each other.
std::vector<Residual> central_checks(const model::Model& m);

}  // namespace qsym::algebra
