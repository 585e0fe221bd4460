#pragma once

#include <utility>

#include "qec/int_poly.hpp"

namespace qec {

// Everything here uses the compressed normalisation p~(x) = p(x/2), which
// keeps the Chebyshev family monic with integer coefficients.

/// U~_n(x) = U_n(x/2): U~_0 = 1, U~_1 = x, U~_{n+1} = x U~_n - U~_{n-1}.
/// This is the characteristic polynomial of the path on n vertices.
/// Accepts n = -1 (returns 0).
IntPoly u_tilde(int n);

/// Partial Chebyshev factors (ue, uo) of U~_n: ue collects the zeros
/// 2cos(l pi/(n+1)) with l even, uo those with l odd, and U~_n = ue * uo.
///   n = 2k:   ue = U~_k + U~_{k-1},  uo = U~_k - U~_{k-1}
///   n = 2k+1: ue = U~_k,             uo = U~_{k+1} - U~_{k-1}
std::pair<IntPoly, IntPoly> partial_chebyshev(int n);

/// Phi_n(x) = ((n+1)x^2 - 6x - 4n) U~_n + 2(x+2) U~_{n-1} + 2(x+2).
/// Degree n+2, leading coefficient n+1. The minimal root gives the QE
/// constant of the fan K_1 + P_n.
IntPoly phi(int n);

/// Phi_n / ue_n, i.e. 4 Q_n(x/2). The division is exact.
IntPoly q_poly(int n);

/// q_poly(n) / (x-2)^2. The division is exact, so that
/// Phi_n = (x-2)^2 * ue_n * R_n.
IntPoly r_poly(int n);

}  // namespace qec
