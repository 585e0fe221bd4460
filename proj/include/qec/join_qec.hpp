#pragma once

#include <vector>

#include "qec/graph.hpp"
#include "qec/int_poly.hpp"
#include "qec/spectra.hpp"

namespace qec {

/// det(xI - M) by Faddeev-LeVerrier over the integers.
IntPoly char_poly(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(const IntMatrix& m);

/// p(x) = det(A - xI) and q(x) = det(A - xI + J) - det(A - xI), so that
/// <1, (A - xI)^{-1} 1> = q(x) / p(x) away from the spectrum of A.
struct OnesQuadraticForm {
    IntPoly p;
    IntPoly q;
};
OnesQuadraticForm ones_quadratic_form_poly(const IntMatrix& a);

/// Candidate stationary values alpha for QEC(empty_m + G), split by how they
/// arise from the stationary system:
///   lambda0: alpha = -m, present iff m >= 2 and m is an eigenvalue of J - A;
///   lambda1: roots of (alpha + 2m) <1,(A - alpha I)^{-1} 1> = m off the
///            excluded set ev(A) and {0, -m, -2m};
///   lambda2: alpha = -2m, present iff -2m is an eigenvalue of A;
///   lambda3: eigenvalues of A outside {0, -m, -2m} with an eigenvector
///            orthogonal to 1.
struct LambdaSets {
    int m = 1;
    std::vector<double> lambda0, lambda1, lambda2, lambda3;
    std::vector<double> excluded;  // ev(A) followed by 0, -m, -2m

    /// Minimum over the union together with the set it came from; ties go
    /// to the lowest-indexed set.
    std::pair<double, QecSource> minimum(double tie_tol = 1e-10) const;
};

/// Throws InvalidArgument when empty_m + G is complete (m = 1 and G
/// complete); its QE constant is -1.
LambdaSets compute_lambda_sets(int m, const Graph& g);

/// QEC(empty_m + G) = -alpha~ - 2 with alpha~ the minimum of the four
/// sets. The result carries a stationary witness for alpha~.
QecResult qec_join_empty(int m, const Graph& g);

/// Closed form for K_1 + G with G kappa-regular (kappa >= 1) on n vertices:
/// max{ -(kappa+2)/(n+1), -min ev(A) - 2 }.
QecResult qec_k1_regular(const Graph& g);

}  // namespace qec
