#include "qsym/oracle/wavefunction.hpp"

#include <cmath>
#include <functional>

#include "qsym/exact/errors.hpp"
#include "qsym/oracle/special.hpp"

namespace qsym::oracle {

namespace {

using Fn = std::function<long double(long double)>;

// Coefficients of a0(s) f'' + a1(s) f' + a2(s) f = 0 in the stretched variable s,
// returned as separate pieces so the residual can be scaled by their magnitudes.
struct OdeTerms {
  long double second;
  long double first;
  long double zeroth;
};
using OdeFn = std::function<OdeTerms(long double s)>;

double l2_residual(const Fn& f, const OdeFn& ode, long double lo, long double hi, int intervals) {
  const long double h = (hi - lo) / intervals;
  std::vector<long double> values(intervals + 1);
  for (int j = 0; j <= intervals; ++j) values[j] = f(lo + j * h);
  long double num = 0;
  long double den = 0;
  for (int j = 1; j < intervals; ++j) {
    const long double s = lo + j * h;
    const long double d2 = (values[j + 1] - 2 * values[j] + values[j - 1]) / (h * h);
    const long double d1 = (values[j + 1] - values[j - 1]) / (2 * h);
    const OdeTerms t = ode(s);
    const long double a = t.second * d2;
    const long double b = t.first * d1;
    const long double c = t.zeroth * values[j];
    const long double res = a + b + c;
    const long double scale = std::fabs(a) + std::fabs(b) + std::fabs(c);
    num += res * res;
    den += scale * scale;
  }
  if (den == 0) throw InvalidArgument("wavefunction vanishes on the residual grid");
  return static_cast<double>(std::sqrt(num / den));
}

WaveResidual measure(const Fn& f, const OdeFn& ode, long double lo, long double hi, int points) {
  if (points < 16 || points % 2 != 0) throw InvalidArgument("residual grid needs an even count >= 16");
  WaveResidual w;
  w.points = points;
  w.residual = l2_residual(f, ode, lo, hi, points);
  w.residual_coarse = l2_residual(f, ode, lo, hi, points / 2);
  w.order_ratio = w.residual > 0 ? w.residual_coarse / w.residual : 0;
  return w;
}

// The radial operator -hbar^2/2 (R'' + (d-1)/r R') + [hbar^2 lam(lam+d-2)/(2r^2) + V - E] R
// multiplied by r^2 and written in x = ln r: -hbar^2/2 (R_xx + (d-2) R_x) + [...] R.
OdeFn radial_ode(int d, long double lam, long double hbar, std::function<long double(long double)> v,
                 long double energy) {
  return [=](long double x) {
    const long double r = std::exp(x);
    const long double h2 = hbar * hbar;
    return OdeTerms{-h2 / 2, -h2 / 2 * (d - 2), h2 * lam * (lam + d - 2) / 2 + (v(r) - energy) * r * r};
  };
}

}  // namespace

bool WaveResidual::second_order(double tolerance) const { return std::fabs(order_ratio - 4.0) <= tolerance * 4.0; }

double kc_radial_scale(double energy, double hbar) {
  if (!(energy < 0)) throw DomainError("KC radial form needs E < 0");
  return 2.0 * std::sqrt(-2.0 * energy) / hbar;
}

WaveResidual kc_radial_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                int points) {
  if (params.kind != Kind::KC) throw InvalidArgument("KC radial residual needs the KC model");
  qn.validate(params);
  const long double energy = spectra::physical_spectrum_kc(params, qn, phys).to_double();
  const long double hbar = phys.hbar.to_double();
  const long double c0 = phys.c0.to_double();
  const long double lam = effective_lambda(params, qn, phys);
  const long double eps = kc_radial_scale(static_cast<double>(energy), static_cast<double>(hbar));
  const int d = params.dim;
  const long double a = -qn.n + qn.l + 1;
  const long double b = 2 * lam + d - 1;
  Fn f = [=](long double x) {
    const long double rho = eps * std::exp(x);
    return std::exp(lam * std::log(rho) - rho / 2) * hyp1f1_terminating(a, b, rho);
  };
  auto v = [c0](long double r) { return -c0 / r; };
  return measure(f, radial_ode(d, lam, hbar, v, energy), std::log(1e-3L / eps), std::log(100.0L / eps), points);
}

WaveResidual kc_angular_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                 KcJacobi form, int points) {
  if (params.kind != Kind::KC) throw InvalidArgument("KC angular residual needs the KC model");
  qn.validate(params);
  const long double d1 = spectra::delta_kc(1, params, qn.I, phys).to_double();
  const long double d2 = spectra::delta_kc(2, params, qn.I, phys).to_double();
  const long double c1 = phys.c1_reduced().to_double();
  const long double c2 = phys.c2_reduced().to_double();
  const long double lam = effective_lambda(params, qn, phys);
  const int N = params.dim;
  const int I = qn.I;
  const long double mu = lam * (lam + N - 2);
  const long double K = static_cast<long double>(I) * (I + N - 3);
  const long double shift = form == KcJacobi::Corrected ? (N - 3) / 2.0L : 0.0L;
  // 1 + tanh y and 1 - tanh y without cancellation.
  auto plus = [](long double y) { return 2 / (1 + std::exp(-2 * y)); };
  auto minus = [](long double y) { return 2 / (1 + std::exp(2 * y)); };
  Fn f = [=](long double y) {
    const long double z = std::tanh(y);
    return std::exp((d1 + I) / 2 * std::log(plus(y)) + (d2 + I) / 2 * std::log(minus(y))) *
           jacobi(qn.l - I, d2 + I + shift, d1 + I + shift, z);
  };
  // (1 - z^2) times the polar equation, in y = atanh z.
  OdeFn ode = [=](long double y) {
    const long double z = std::tanh(y);
    return OdeTerms{1, (3 - N) * z, -(K + 2 * c1 * minus(y) + 2 * c2 * plus(y)) + mu * plus(y) * minus(y)};
  };
  return measure(f, ode, -10.0L, 10.0L, points);
}

WaveResidual dso_block_residual(const ModelParams& params, const QuantumNumbers& qn, const PhysicalParams& phys,
                                int block, DsoPower power, int points) {
  if (params.kind != Kind::DSO) throw InvalidArgument("DSO block residual needs the DSO model");
  if (block != 1 && block != 2) throw InvalidArgument("DSO block must be 1 or 2");
  qn.validate(params);
  const int d = block == 1 ? params.split : params.dim - params.split;
  const int l = block == 1 ? qn.l1 : qn.l2;
  const int nr = block == 1 ? qn.n1 : qn.n2;
  const long double hbar = phys.hbar.to_double();
  const long double omega = phys.omega.to_double();
  const long double delta = spectra::delta_dso(block, params, l, phys).to_double();
  const long double lam = effective_lambda(params, qn, phys, block);
  const long double energy = hbar * omega * (2 * nr + lam + d / 2.0L);
  const long double k = power == DsoPower::Corrected ? delta + l / 2.0L : (delta + l / 2.0L) / 2;
  const long double b = 2 * (delta + l / 2.0L + d / 4.0L);
  Fn f = [=](long double x) {
    const long double r = std::exp(x);
    const long double u = omega * r * r / hbar;
    return std::exp(k * std::log(u) - u / 2) * hyp1f1_terminating(-nr, b, u);
  };
  auto v = [omega](long double r) { return omega * omega * r * r / 2; };
  const long double len = std::sqrt(hbar / omega);
  return measure(f, radial_ode(d, lam, hbar, v, energy), std::log(1e-3L * len), std::log(std::sqrt(80.0L) * len),
                 points);
}

}  // namespace qsym::oracle
