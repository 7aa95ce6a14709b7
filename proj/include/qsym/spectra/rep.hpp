#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsym/model/model.hpp"
#include "qsym/spectra/number.hpp"

namespace qsym::spectra {

using model::Kind;
using model::ModelParams;

/// Numeric values of hbar, c0, c1, c2, omega. c1, c2 >= 0 and hbar, omega > 0.
struct PhysicalParams {
  Number hbar{1};
  Number c0{1};
  Number c1{0};
  Number c2{0};
  Number omega{1};

  void validate() const;
  Number c1_reduced() const { return c1 / (hbar * hbar); }
  Number c2_reduced() const { return c2 / (hbar * hbar); }
};

/// Radicand convention for the KC m-parameters. Adopted: m_i^2 = (I + (N-3)/2)^2 + 4c'_i.
/// Footnote: the literal table footnote, which is 4x the adopted radicand.
enum class MNormalization { Adopted, Footnote };

/// Angular labels entering the central eigenvalues: I for KC (J^2), l1 and l2 for
/// DSO (J_(2) and K_(2)).
struct AngularLabels {
  int I = 0;
  int l1 = 0;
  int l2 = 0;
};

struct MParams {
  Number m1;
  Number m2;
};

/// hbar^2 I (I + M - 2): the quadratic Casimir of so(M) on rank-I symmetric harmonics.
Number so_casimir_eigenvalue(int I, int M, const Number& hbar = Number(1));

MParams m_parameters(const ModelParams& params, const AngularLabels& labels, const PhysicalParams& phys,
                     MNormalization norm = MNormalization::Adopted);

/// Phi(x) = nu0 * prod_{i=1..6} (x + u - nu_i).
struct StructureFunction {
  Kind kind = Kind::KC;
  Number nu0;
  std::array<Number, 6> nu;
  Number u;
  Number energy;

  Number operator()(const Number& x) const;
  /// Zeros of Phi, i.e. nu_i - u.
  std::array<Number, 6> zeros() const;
};

/// Throws DomainError for KC with E >= 0.
StructureFunction structure_function(const ModelParams& params, const MParams& m, const PhysicalParams& phys,
                                     const Number& u, const Number& energy);

/// Root indices are 1-based; eps1, eps2 are the signs of the m-terms in whichever
/// of the two roots lies in nu_1..nu_4 (0 when neither does).
struct Branch {
  int zero_root = 0;  // u = nu_{zero_root}, forcing Phi(0) = 0
  int top_root = 0;   // p + 1 + u = nu_{top_root}, forcing Phi(p+1) = 0
  int eps1 = 0;
  int eps2 = 0;

  std::string label() const;
};

struct RepSolution {
  int p = 0;
  Number energy;
  Number u;
  Branch branch;
  StructureFunction phi;
  std::vector<Number> phi_values;  // Phi(1..p)
  bool integer_positive = false;
  bool continuous_positive = false;
};

constexpr int kMaxRepDimension = 64;

/// Every (zero_root, top_root) assignment whose energy is determined and which is
/// unitary at the integer points 1..p. KC additionally requires E < 0. Throws
/// InvalidArgument for p outside [0, kMaxRepDimension].
std::vector<RepSolution> enumerate_reps(const ModelParams& params, const MParams& m, int p,
                                        const PhysicalParams& phys);

/// Number of distinct zero roots among nu_1..nu_4 that carry a surviving solution.
int surviving_zero_roots(const std::vector<RepSolution>& reps);

/// KC: (n, I, l) with 0 <= I <= l <= n - 1. DSO: (n1, n2, l1, l2); a one-dimensional
/// block only admits l = 0.
struct QuantumNumbers {
  int n = 1;
  int I = 0;
  int l = 0;
  int n1 = 0;
  int n2 = 0;
  int l1 = 0;
  int l2 = 0;

  static QuantumNumbers kc(int n, int I, int l);
  static QuantumNumbers dso(int n1, int n2, int l1, int l2);

  void validate(const ModelParams& params) const;
  /// Representation dimension minus one: n - 1 - I (KC) or n1 + n2 (DSO).
  int p(Kind kind) const;
  AngularLabels angular(Kind kind) const;
  std::string label(Kind kind) const;
};

/// KC: sqrt((I + (N-3)/2)^2 + 4c'_i) - (N-3)/2 - I.
Number delta_kc(int i, const ModelParams& params, int I, const PhysicalParams& phys);
/// DSO block i of dimension d: sqrt((l/2 + (d-2)/4)^2 + c'_i/2) - (d-2)/4 - l/2.
Number delta_dso(int i, const ModelParams& params, int l, const PhysicalParams& phys);
/// alpha_i = 2 delta_i + l + (d-2)/2.
Number alpha_dso(int i, const ModelParams& params, int l, const PhysicalParams& phys);

Number physical_spectrum_kc(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys);
Number physical_spectrum_dso(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys);
Number physical_spectrum(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys);

struct MatchVerdict {
  bool matched = false;
  std::optional<std::size_t> index;  // into the candidate list
  Branch branch;
  Number algebraic;
  Number physical;
  Real relative_error = 0;
  bool exact = false;  // matched in exact arithmetic
};

constexpr double kMatchTolerance = 1e-12;

/// Picks the candidate whose energy equals the physical one (exactly when both are
/// exact, else within tol relative); the first exact match wins, then the closest.
MatchVerdict match_identification(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                  const std::vector<RepSolution>& candidates, double tol = kMatchTolerance);

/// Enumerates at p(qn) with the given m normalization and matches.
MatchVerdict identify(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                      MNormalization norm = MNormalization::Adopted, double tol = kMatchTolerance);

/// (p+1)-dimensional matrices, row-major.
struct OscillatorRep {
  int dim = 1;
  std::vector<Number> aleph;
  std::vector<Number> b;
  std::vector<Number> b_dagger;

  const Number& at(const std::vector<Number>& m, int row, int col) const { return m[row * dim + col]; }
};

/// Throws DomainError unless Phi(1..p) > 0.
OscillatorRep build_oscillator_rep(const RepSolution& rep);

struct OscillatorCheck {
  Real aleph_b_dagger = 0;  // [aleph, b^+] - b^+
  Real aleph_b = 0;         // [aleph, b] + b
  Real b_b_dagger = 0;      // b b^+ - Phi(aleph + 1)
  Real b_dagger_b = 0;      // b^+ b - Phi(aleph)
  bool exact = false;       // every residual is an exact zero

  Real max() const;
};

/// Residuals normalized by max(1, max_k |Phi(k)|).
OscillatorCheck check_oscillator_relations(const OscillatorRep& rep, const StructureFunction& phi);

}  // namespace qsym::spectra
