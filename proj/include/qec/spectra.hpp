#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qec/graph.hpp"

namespace qec {

/// Eigen-decomposition of a real symmetric matrix. Eigenvalues are sorted
/// descending; column k of `vectors` belongs to values[k].
struct Spectrum {
    std::vector<double> values;
    Eigen::MatrixXd vectors;

    int dimension() const noexcept { return static_cast<int>(values.size()); }
};

/// Cyclic Jacobi rotations. Throws InvalidArgument unless M is square and
/// symmetric to 1e-12 relative to its largest entry.
Spectrum eigen_sym(const Eigen::MatrixXd& m);

/// Eigenvalues within `tol` of their neighbour are one cluster.
struct EigenCluster {
    double value;  // mean of the member eigenvalues
    int first;     // index into Spectrum::values
    int count;
};
std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& spec, double tol = 1e-9);

/// True iff the eigenspace for the cluster at `alpha` contains a nonzero
/// vector orthogonal to the all-ones vector. Throws InvalidArgument if no
/// eigenvalue lies within cluster_tol of alpha.
bool eigenspace_orthogonal_to_ones(const Spectrum& spec, double alpha, double cluster_tol = 1e-9);

/// A unit vector in the eigenspace of the cluster at `alpha` that is
/// orthogonal to the all-ones vector, when one exists.
std::optional<Eigen::VectorXd> ones_orthogonal_eigenvector(const Spectrum& spec, double alpha,
                                                          double cluster_tol = 1e-9);

/// Orthonormal basis (n x (n-1)) of the complement of the all-ones vector,
/// taken from the Householder reflector that sends 1/sqrt(n) to e_1.
Eigen::MatrixXd ones_complement_basis(int n);

/// Solution (alpha, mu, f, g) of the stationary system of the constrained
/// maximisation for a join G1 + G2:
///   (A1 - J - alpha I) f = -(mu/2) 1,   (A2 - J - alpha I) g = -(mu/2) 1,
///   <f,f> + <g,g> = 1,                  <1,f> + <1,g> = 0.
/// The objective value at such a point is lambda = -alpha - 2.
struct StationaryWitness {
    double alpha = 0;
    double mu = 0;
    Eigen::VectorXd f;
    Eigen::VectorXd g;

    double lambda() const noexcept { return -alpha - 2; }
};

struct WitnessResiduals {
    double normalization;  // |<f,f> + <g,g> - 1|
    double balance;        // |<1,f> + <1,g>|
    double equation_f;     // |(A1 - J - alpha I) f + (mu/2) 1|_inf
    double equation_g;     // |(A2 - J - alpha I) g + (mu/2) 1|_inf
};
WitnessResiduals witness_residuals(const StationaryWitness& w, const IntMatrix& a1, const IntMatrix& a2);

/// <x, D x> for x = [f; g], D the distance matrix of the join.
double witness_objective(const StationaryWitness& w, const Graph& g1, const Graph& g2);

enum class QecSource { oracle, lambda0, lambda1, lambda2, lambda3, fan_closed_form };

std::string_view to_string(QecSource s);
std::optional<QecSource> source_from_string(std::string_view s);

struct QecResult {
    double value = 0;
    double alpha = 0;  // always -value - 2
    QecSource source = QecSource::oracle;
    std::optional<StationaryWitness> witness;
};

/// Largest eigenvalue of Q^T D Q with Q a basis of the ones-complement.
/// Throws NotConnected for disconnected input and InvalidArgument for n = 1.
QecResult qec_oracle(const Graph& g);
double qec_oracle_with_basis(const DistanceMatrix& d, const Eigen::MatrixXd& basis);

}  // namespace qec
