#pragma once

#include "qsym/oracle/radial.hpp"

namespace qsym::oracle {

/// Exponent convention for the DSO block wavefunction e^{-u/2} u^k 1F1(-n1; lambda + d/2; u).
/// Printed: k = (delta + l/2)/2. Corrected: k = delta + l/2, the indicial root of the block ODE.
enum class DsoPower { Printed, Corrected };

/// Jacobi parameters for the KC polar factor. Printed: (delta2 + I, delta1 + I), which solves the
/// polar equation only for N = 3. Corrected: both shifted by (N-3)/2.
enum class KcJacobi { Printed, Corrected };

/// Relative L2 residual of a closed form under its separated ODE, evaluated by
/// second-order central differences on a stretched grid (r = e^x radially,
/// z = tanh y for the polar angle) so endpoint powers stay smooth.
struct WaveResidual {
  double residual = 0;         // on `points` intervals
  double residual_coarse = 0;  // on points/2 intervals
  double order_ratio = 0;      // residual_coarse / residual, 4 for a second-order scheme
  int points = 0;

  bool second_order(double tolerance = kDefaultRatioTolerance) const;
};

constexpr int kDefaultWavePoints = 1 << 16;

/// epsilon = 2 sqrt(-2E)/hbar for the KC radial form.
double kc_radial_scale(double energy, double hbar);

/// (eps r)^lambda e^{-eps r/2} 1F1(-n+l+1, 2 lambda + N - 1; eps r), lambda = l + (delta1+delta2)/2.
WaveResidual kc_radial_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                int points = kDefaultWavePoints);

/// (1+z)^{(delta1+I)/2} (1-z)^{(delta2+I)/2} P_{l-I}^{(alpha, beta)}(z) against the polar equation
/// (1-z^2) T'' - (N-1) z T' - [I(I+N-3)/(1-z^2) + 2c'_1/(1+z) + 2c'_2/(1-z)] T + lambda(lambda+N-2) T = 0.
WaveResidual kc_angular_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                 KcJacobi jacobi = KcJacobi::Corrected, int points = kDefaultWavePoints);

/// Block 1 (dimension n, labels n1, l1, c1) or block 2 (dimension N-n, labels n2, l2, c2).
WaveResidual dso_block_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                int block, DsoPower power = DsoPower::Corrected, int points = kDefaultWavePoints);

}  // namespace qsym::oracle
