#include "qec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qec/error.hpp"

namespace qec {

Spectrum eigen_sym(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("eigen_sym: matrix is not square");
    const Eigen::Index n = m.rows();
    const double scale = std::max(1.0, n ? m.cwiseAbs().maxCoeff() : 0.0);
    if (n && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw InvalidArgument("eigen_sym: matrix is not symmetric");

    Eigen::MatrixXd a = 0.5 * (m + m.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double frob = a.norm();

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off == 0 || std::sqrt(off) <= 1e-16 * frob) break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1 / std::hypot(t, 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

    Spectrum out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        Eigen::VectorXd col = v.col(order[k]);
        col.normalize();
        // Fix the sign: first non-negligible component positive.
        for (Eigen::Index i = 0; i < n; ++i)
            if (std::abs(col(i)) > 1e-12) {
                if (col(i) < 0) col = -col;
                break;
            }
        out.vectors.col(k) = col;
    }
    return out;
}

std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& spec, double tol) {
    std::vector<EigenCluster> out;
    const int n = spec.dimension();
    int i = 0;
    while (i < n) {
        int j = i + 1;
        while (j < n && spec.values[j - 1] - spec.values[j] <= tol) ++j;
        double sum = 0;
        for (int k = i; k < j; ++k) sum += spec.values[k];
        out.push_back({sum / (j - i), i, j - i});
        i = j;
    }
    return out;
}

namespace {

const EigenCluster& find_cluster(const std::vector<EigenCluster>& clusters, const Spectrum& spec,
                                 double alpha, double tol) {
    for (const auto& c : clusters)
        for (int k = c.first; k < c.first + c.count; ++k)
            if (std::abs(spec.values[k] - alpha) <= tol) return c;
    throw InvalidArgument("no eigenvalue within " + std::to_string(tol) + " of " + std::to_string(alpha));
}

}  // namespace

bool eigenspace_orthogonal_to_ones(const Spectrum& spec, double alpha, double cluster_tol) {
    auto clusters = cluster_eigenvalues(spec, cluster_tol);
    const auto& c = find_cluster(clusters, spec, alpha, cluster_tol);
    if (c.count >= 2) return true;
    const double n = spec.dimension();
    return std::abs(spec.vectors.col(c.first).sum()) <= 1e-8 * std::sqrt(n);
}

std::optional<Eigen::VectorXd> ones_orthogonal_eigenvector(const Spectrum& spec, double alpha,
                                                          double cluster_tol) {
    if (!eigenspace_orthogonal_to_ones(spec, alpha, cluster_tol)) return std::nullopt;
    auto clusters = cluster_eigenvalues(spec, cluster_tol);
    const auto& c = find_cluster(clusters, spec, alpha, cluster_tol);
    Eigen::MatrixXd basis = spec.vectors.middleCols(c.first, c.count);
    if (c.count == 1) return Eigen::VectorXd(basis.col(0));

    // Coefficients of the eigenspace basis whose combination sums to zero.
    Eigen::VectorXd w = basis.transpose() * Eigen::VectorXd::Ones(basis.rows());
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(c.count);
    if (w.squaredNorm() <= 1e-24) {
        coeff(0) = 1;
    } else {
        Eigen::Index i = 0;
        w.cwiseAbs().minCoeff(&i);
        coeff(i) = 1;
        coeff -= w * (w(i) / w.squaredNorm());
    }
    Eigen::VectorXd g = basis * coeff;
    g.normalize();
    return g;
}

Eigen::MatrixXd ones_complement_basis(int n) {
    if (n < 1) throw InvalidArgument("ones_complement_basis: n must be positive");
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1 / std::sqrt(double(n)));
    v(0) -= 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    const double vv = v.squaredNorm();
    if (vv > 0) h -= (2 / vv) * v * v.transpose();
    return h.rightCols(n - 1);
}

WitnessResiduals witness_residuals(const StationaryWitness& w, const IntMatrix& a1, const IntMatrix& a2) {
    const double half_mu = w.mu / 2;
    Eigen::VectorXd rf = a1.cast<double>() * w.f - Eigen::VectorXd::Constant(w.f.size(), w.f.sum()) -
                         w.alpha * w.f + Eigen::VectorXd::Constant(w.f.size(), half_mu);
    Eigen::VectorXd rg = a2.cast<double>() * w.g - Eigen::VectorXd::Constant(w.g.size(), w.g.sum()) -
                         w.alpha * w.g + Eigen::VectorXd::Constant(w.g.size(), half_mu);
    return {std::abs(w.f.squaredNorm() + w.g.squaredNorm() - 1), std::abs(w.f.sum() + w.g.sum()),
            rf.size() ? rf.cwiseAbs().maxCoeff() : 0.0, rg.size() ? rg.cwiseAbs().maxCoeff() : 0.0};
}

double witness_objective(const StationaryWitness& w, const Graph& g1, const Graph& g2) {
    Eigen::MatrixXd d = join_distance_matrix(g1, g2).as_real();
    Eigen::VectorXd x(w.f.size() + w.g.size());
    x << w.f, w.g;
    return x.dot(d * x);
}

std::string_view to_string(QecSource s) {
    switch (s) {
        case QecSource::oracle: return "oracle";
        case QecSource::lambda0: return "lambda0";
        case QecSource::lambda1: return "lambda1";
        case QecSource::lambda2: return "lambda2";
        case QecSource::lambda3: return "lambda3";
        case QecSource::fan_closed_form: return "fan-closed-form";
    }
    return "?";
}

std::optional<QecSource> source_from_string(std::string_view s) {
    for (auto src : {QecSource::oracle, QecSource::lambda0, QecSource::lambda1, QecSource::lambda2,
                     QecSource::lambda3, QecSource::fan_closed_form})
        if (to_string(src) == s) return src;
    return std::nullopt;
}

double qec_oracle_with_basis(const DistanceMatrix& d, const Eigen::MatrixXd& basis) {
    Eigen::MatrixXd m = basis.transpose() * d.as_real() * basis;
    m = 0.5 * (m + m.transpose()).eval();
    return eigen_sym(m).values.front();
}

QecResult qec_oracle(const Graph& g) {
    if (g.order() < 2) throw InvalidArgument("QE constant is undefined for a single vertex");
    DistanceMatrix d = distance_matrix(g);
    QecResult r;
    r.value = qec_oracle_with_basis(d, ones_complement_basis(g.order()));
    r.alpha = -r.value - 2;
    r.source = QecSource::oracle;
    return r;
}

}  // namespace qec
