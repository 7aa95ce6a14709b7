#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/weyl/diffop.hpp"

namespace qsym::model {

using exact::Poly;
using exact::RadExt;
using exact::Ring;
using weyl::DiffOp;

enum class Kind { KC, DSO };

std::string to_string(Kind k);
/// Parses "kc" / "dso"; throws InvalidArgument otherwise.
Kind parse_kind(const std::string& s);

/// Model family and concrete dimension. Physical constants stay symbolic.
struct ModelParams {
  Kind kind = Kind::KC;
  int dim = 3;
  int split = 0;  // n for DSO: first block is x_1..x_n

  /// KC needs dim >= 3; DSO needs 1 <= split <= dim - 1.
  void validate() const;
  std::string label() const;

  static ModelParams kc(int dim) { return {Kind::KC, dim, 0}; }
  static ModelParams dso(int dim, int split) { return {Kind::DSO, dim, split}; }
};

/// Builds the Hamiltonian, its integrals of motion and the Lie-sector
/// generators for one model at fixed dimension.
///
/// Axis arguments are 1-based, matching the usual x_1..x_N labels. Operators
/// reference the model's ring, so the Model must outlive them.
class Model {
 public:
  explicit Model(ModelParams params);

  const ModelParams& params() const { return params_; }
  const Ring& ring() const { return *ring_; }
  int dim() const { return params_.dim; }

  // Coefficient-level building blocks.
  RadExt coord(int axis) const;
  RadExt radius() const;
  RadExt param(exact::Var v) const;
  /// 1/(r(r+x_N)) and 1/(r(r-x_N)).
  RadExt chi1() const;
  RadExt chi2() const;
  /// 1/(x_1^2+...+x_n^2) and 1/(x_{n+1}^2+...+x_N^2).
  RadExt phi1() const;
  RadExt phi2() const;

  DiffOp momentum(int axis) const;
  /// x_i p_j - x_j p_i
  DiffOp angular(int i, int j) const;
  /// Sum of L_ij^2 over first <= i < j <= last (zero for empty ranges).
  DiffOp angular_casimir(int first, int last) const;

  const DiffOp& hamiltonian() const;
  /// DSO only: H_1 (block 1) or H_2 (block 2).
  DiffOp hamiltonian_block(int block) const;
  /// KC: J^2 = sum_{i<j<=N-1} L_ij^2.
  DiffOp J2() const;
  /// DSO: J_(2) and K_(2).
  DiffOp J2_block() const;
  DiffOp K2_block() const;
  /// KC only: M_j.
  DiffOp runge_lenz(int j) const;
  const DiffOp& A() const;
  const DiffOp& B() const;

  /// Index pairs (i < j) of the Lie sectors: one sector for KC (1..N-1), two for DSO.
  std::vector<std::vector<std::pair<int, int>>> lie_sectors() const;

 private:
  void check_axis(int axis) const;
  DiffOp build_hamiltonian() const;
  DiffOp build_A() const;
  DiffOp build_B() const;

  ModelParams params_;
  std::unique_ptr<Ring> ring_;
  mutable std::optional<DiffOp> h_;
  mutable std::optional<DiffOp> a_;
  mutable std::optional<DiffOp> b_;
};

}  // namespace qsym::model
