#pragma once

#include <vector>

#include <Eigen/Core>

#include "qec/join_qec.hpp"
#include "qec/spectra.hpp"

namespace qec {

/// Solution set of the boundary value problem
///     f_{k+2} - lambda f_{k+1} + f_k = mu   (0 <= k <= n-1),  f_0 = f_{n+1} = 0.
/// Equivalently (A_n - lambda I) f = mu 1 with A_n the adjacency matrix of P_n.
///
/// `values` holds f_0..f_{n+1}: the solution when kind == unique, or the
/// particular member with K = 0 when kind == family. For a family every
/// solution is values + K * direction.
struct RecurrenceSolution {
    enum class Kind { unique, family, none };

    Kind kind = Kind::none;
    std::vector<double> values;
    std::vector<double> direction;
};

/// Dispatches on lambda: the lambda = +-2 closed forms, the generic case off
/// the spectrum of A_n (hyperbolic form for |lambda| > 2, trigonometric for
/// |lambda| < 2), and the eigenvalue cases lambda = 2cos(l pi/(n+1)).
/// `eigen_tol` decides when lambda counts as +-2 or as an eigenvalue.
RecurrenceSolution solve_recurrence(int n, double lambda, double mu, double eigen_tol = 1e-12);

/// Max over k of |f_{k+2} - lambda f_{k+1} + f_k - mu| and the two
/// boundary values.
double recurrence_residual(const std::vector<double>& f, double lambda, double mu);

struct PathEigenpair {
    double alpha;            // 2cos(l pi/(n+1))
    Eigen::VectorXd vector;  // sin(k l pi/(n+1)), k = 1..n
    bool orthogonal_to_ones; // l even
};
PathEigenpair path_eigen(int n, int l);

/// QEC(K_1 + P_n). n = 1, 2 give -1; even n uses alpha~ = -2cos(pi/(n+1));
/// odd n >= 3 refines the minimal root of Phi_n inside
/// (-2, -2cos(pi/(n+1))).
QecResult qec_fan(int n);

/// Minimal real root of Phi_n by Sturm isolation over the whole line and
/// bisection of the square-free part.
double phi_minimal_root(int n, double tol = 1e-14);

/// Stationary sets of K_1 + P_n (n >= 3) from Phi_n and the path spectrum.
LambdaSets fan_lambda_sets(int n);

/// Points x_0..x_n in R^n realising the distances of K_1 + P_n as squared
/// Euclidean distances: x_0 = 0 and
/// x_k = sqrt((k-1)/2k) e_{k-1} + sqrt((k+1)/2k) e_k.
struct Embedding {
    std::vector<Eigen::VectorXd> points;
};
Embedding fan_embedding(int n);

/// max |‖x_j - x_k‖^2 - d(j, k)| over all pairs.
double embedding_residual(const Embedding& e, const DistanceMatrix& d);

}  // namespace qec
