#include "qsym/oracle/special.hpp"

#include <cmath>
#include <string>

#include "qsym/exact/errors.hpp"

namespace qsym::oracle {

long double hyp1f1_terminating(long double a, long double b, long double x) {
  const long double rounded = std::nearbyint(a);
  if (a > 0 || std::fabs(a - rounded) > 1e-12L) {
    throw InvalidArgument("1F1 series does not terminate for a = " + std::to_string(static_cast<double>(a)));
  }
  const int terms = static_cast<int>(-rounded);
  long double term = 1;
  long double sum = 1;
  for (int k = 0; k < terms; ++k) {
    const long double denom = (b + k) * (k + 1);
    if (denom == 0) throw InvalidArgument("1F1 lower parameter hits a nonpositive integer");
    term *= (rounded + k) * x / denom;
    sum += term;
  }
  return sum;
}

long double jacobi(int n, long double alpha, long double beta, long double x) {
  if (n < 0) throw InvalidArgument("Jacobi degree must be nonnegative");
  if (n == 0) return 1;
  long double prev = 1;
  long double cur = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    const long double s = 2 * k + alpha + beta;
    const long double a1 = 2 * k * (k + alpha + beta) * (s - 2);
    const long double a2 = (s - 1) * (alpha * alpha - beta * beta);
    const long double a3 = (s - 2) * (s - 1) * s;
    const long double a4 = 2 * (k + alpha - 1) * (k + beta - 1) * s;
    const long double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace qsym::oracle
