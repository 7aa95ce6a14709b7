#pragma once

#include <string>
#include <vector>

#include "qsym/spectra/rep.hpp"

namespace qsym::oracle {

using model::Kind;
using model::ModelParams;
using spectra::PhysicalParams;
using spectra::QuantumNumbers;

enum class RadialKind { KC, DSOBlock };

/// -hbar^2/2 (R'' + (d-1)/r R') + [hbar^2 lambda(lambda+d-2)/(2r^2) + V] R = E R,
/// V = -c0/r (KC) or omega^2 r^2 / 2 (DSO block). r_max <= 0 selects the default.
struct RadialProblem {
  RadialKind kind = RadialKind::KC;
  int dim = 3;
  double lambda = 0;
  double hbar = 1;
  double c0 = 1;
  double omega = 1;
  double r_max = 0;
  int points = 4096;

  void validate() const;
  double lambda_tilde() const { return lambda + (dim - 3) / 2.0; }
  /// KC: 40 n_eff hbar^2/c0 for the highest requested level; DSO: 12 sqrt(hbar/omega).
  double default_r_max(int levels) const;
};

constexpr int kMinResolvedPoints = 256;
constexpr double kDefaultRatioTolerance = 0.15;

struct RadialLevel {
  double energy = 0;        // Richardson value from the two finest grids
  double raw[3] = {0, 0, 0};  // grids P, 2P, 4P
  double ratio = 0;         // (E_P - E_2P) / (E_2P - E_4P), ideally 4
  bool converged = false;
  bool one_sided = false;   // refinement moves the energy monotonically
};

struct RadialSpectrum {
  std::vector<RadialLevel> levels;
  double r_max = 0;
  bool flux_form = false;  // cell-centred flux scheme used for lambda_tilde < 0
};

/// Lowest `count` eigenvalues. Grids coarser than kMinResolvedPoints are solved but
/// always flagged non-converged.
RadialSpectrum radial_eigenvalues(const RadialProblem& problem, int count,
                                  double ratio_tolerance = kDefaultRatioTolerance);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, off), indices [0, count), by
/// Sturm-sequence bisection.
std::vector<long double> tridiagonal_eigenvalues(const std::vector<long double>& diag,
                                                 const std::vector<long double>& off, int count);

/// KC: l + (delta1 + delta2)/2 (block ignored). DSO block 1 or 2: l_i + 2 delta_i.
double effective_lambda(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                        int block = 0);

struct OracleOptions {
  int points = 4096;
  double r_max = 0;
  double ratio_tolerance = kDefaultRatioTolerance;
  double tolerance = 1e-6;
};

struct OracleComparison {
  std::string label;
  double formula = 0;
  double oracle = 0;
  double relative_error = 0;
  double ratio = 0;  // worst block
  bool converged = false;
  bool within_tolerance = false;
  std::vector<double> block_energies;  // DSO: the two block contributions
};

/// Finite-difference energy for qn against the closed-form spectrum.
OracleComparison oracle_compare(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                const OracleOptions& options = {});

}  // namespace qsym::oracle
