#pragma once

namespace qsym::oracle {

/// 1F1(a; b; x) for a nonpositive integer a, summed as the terminating
/// polynomial. Any other a is rejected with InvalidArgument.
long double hyp1f1_terminating(long double a, long double b, long double x);

/// Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.
long double jacobi(int n, long double alpha, long double beta, long double x);

}  // namespace qsym::oracle
