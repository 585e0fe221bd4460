#include "qec/join_qec.hpp"

#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "qec/error.hpp"
#include "qec/roots.hpp"

namespace qec {
namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long>(m(i, j));
    return out;
}

constexpr double kClusterTol = 1e-9;
constexpr double kRootTol = 1e-15;

}  // namespace

IntPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    const BigMatrix a = to_big(m);
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    BigMatrix mk(n, std::vector<BigInt>(n, BigInt(0)));
    BigMatrix prod(n, std::vector<BigInt>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(a[i][l]) != 0) s += a[i][l] * mk[l][j];
                prod[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) prod[i][i] += c[n - k + 1];
        std::swap(mk, prod);
        // c_{n-k} = -tr(A M_k) / k
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (sgn(a[i][l]) != 0) tr += a[i][l] * mk[l][i];
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), k))
            throw InternalError("char_poly: trace not divisible in Faddeev-LeVerrier step");
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
        c[n - k] = -tr;
    }
    return IntPoly(std::move(c));
}

BigInt bareiss_det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("bareiss_det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigMatrix a = to_big(m);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(a[r][k]) == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

OnesQuadraticForm ones_quadratic_form_poly(const IntMatrix& a) {
    const auto n = a.rows();
    const BigInt sign = (n % 2 == 0) ? 1 : -1;
    IntPoly p = char_poly(a) * sign;
    IntPoly with_j = char_poly(a + IntMatrix::Ones(n, n)) * sign;
    return {p, with_j - p};
}

std::pair<double, QecSource> LambdaSets::minimum(double tie_tol) const {
    double best = std::numeric_limits<double>::infinity();
    QecSource src = QecSource::lambda0;
    const std::vector<double>* sets[] = {&lambda0, &lambda1, &lambda2, &lambda3};
    const QecSource tags[] = {QecSource::lambda0, QecSource::lambda1, QecSource::lambda2, QecSource::lambda3};
    for (int i = 0; i < 4; ++i)
        for (double v : *sets[i])
            if (v < best - tie_tol) {
                best = v;
                src = tags[i];
            }
    return {best, src};
}

LambdaSets compute_lambda_sets(int m, const Graph& g) {
    if (m < 1) throw InvalidArgument("compute_lambda_sets: m must be positive");
    if (m == 1 && g.is_complete())
        throw InvalidArgument("K_1 + K_" + std::to_string(g.order()) +
                              " is complete; its QE constant is -1");

    const IntMatrix a = g.adjacency();
    const auto n = a.rows();
    const IntMatrix id = IntMatrix::Identity(n, n);
    LambdaSets out;
    out.m = m;

    if (m >= 2 && sgn(bareiss_det(IntMatrix::Ones(n, n) - a - m * id)) == 0)
        out.lambda0.push_back(-m);
    if (sgn(bareiss_det(a + 2 * m * id)) == 0) out.lambda2.push_back(-2.0 * m);

    // Roots of N(x) = (x + 2m) q(x) - m p(x), with everything shared with p
    // and the points 0, -m, -2m divided out exactly.
    const auto [p, q] = ones_quadratic_form_poly(a);
    IntPoly numer = IntPoly{2L * m, 1} * q - p * BigInt(m);
    numer = deflate_common_roots(std::move(numer), p);
    for (long r : {0L, -1L * m, -2L * m}) numer = deflate_root(std::move(numer), BigInt(r));
    if (numer.degree() >= 1) {
        RootIsolation iso = sturm_isolate(numer);
        for (const auto& r : iso.roots) out.lambda1.push_back(refine_root(iso.square_free, r, kRootTol));
    }

    const Spectrum spec = eigen_sym(a.cast<double>());
    const IntPoly charp = char_poly(a);
    for (const auto& c : cluster_eigenvalues(spec, kClusterTol)) {
        double alpha = c.value;
        const double nearest = std::round(alpha);
        if (std::abs(alpha - nearest) <= kClusterTol && sgn(charp(BigInt(static_cast<long>(nearest)))) == 0) {
            if (root_multiplicity(charp, BigInt(static_cast<long>(nearest))) != c.count)
                throw InternalError("eigenvalue cluster at " + std::to_string(nearest) +
                                    " disagrees with the exact multiplicity");
            alpha = nearest;
        }
        out.excluded.push_back(alpha);
        bool special = false;
        for (double e : {0.0, -1.0 * m, -2.0 * m})
            if (std::abs(alpha - e) <= kClusterTol) special = true;
        if (!special && eigenspace_orthogonal_to_ones(spec, c.value, kClusterTol))
            out.lambda3.push_back(alpha);
    }
    out.excluded.insert(out.excluded.end(), {0.0, -1.0 * m, -2.0 * m});
    return out;
}

namespace {

// Unit vector spanning (part of) the kernel of a symmetric integer matrix.
Eigen::VectorXd kernel_vector(const IntMatrix& k) {
    Spectrum s = eigen_sym(k.cast<double>());
    int best = 0;
    for (int i = 1; i < s.dimension(); ++i)
        if (std::abs(s.values[i]) < std::abs(s.values[best])) best = i;
    return s.vectors.col(best);
}

StationaryWitness make_witness(int m, const Graph& g, double alpha, QecSource src) {
    const IntMatrix a = g.adjacency();
    const auto n = a.rows();
    const IntMatrix id = IntMatrix::Identity(n, n);
    StationaryWitness w;
    w.alpha = alpha;
    switch (src) {
        case QecSource::lambda0: {
            // f = c 1, g = gamma g0 with (A - J + mI) g0 = 0, mu = 0.
            Eigen::VectorXd g0 = kernel_vector(a - IntMatrix::Ones(n, n) + m * id);
            const double s = g0.sum();
            const double gamma = 1 / std::sqrt(s * s / m + 1);
            w.mu = 0;
            w.g = gamma * g0;
            w.f = Eigen::VectorXd::Constant(m, -gamma * s / m);
            break;
        }
        case QecSource::lambda1: {
            Eigen::MatrixXd shifted = a.cast<double>() - alpha * Eigen::MatrixXd::Identity(n, n);
            Eigen::VectorXd h = shifted.fullPivLu().solve(Eigen::VectorXd::Ones(n));
            const double cf = 1 / (alpha + m);
            const double cg = -(alpha + 2 * m) / (alpha + m);
            const double half_mu = 1 / std::sqrt(m * cf * cf + cg * cg * h.squaredNorm());
            w.mu = 2 * half_mu;
            w.f = Eigen::VectorXd::Constant(m, cf * half_mu);
            w.g = cg * half_mu * h;
            break;
        }
        case QecSource::lambda2: {
            Eigen::VectorXd g0 = kernel_vector(a + 2 * m * id);
            const double s = g0.sum();
            const double gamma = 1 / std::sqrt(s * s / m + 1);
            const double half_mu = gamma * s;
            w.mu = 2 * half_mu;
            w.g = gamma * g0;
            w.f = Eigen::VectorXd::Constant(m, -half_mu / m);
            break;
        }
        case QecSource::lambda3: {
            const Spectrum spec = eigen_sym(a.cast<double>());
            auto g0 = ones_orthogonal_eigenvector(spec, alpha, kClusterTol);
            if (!g0) throw InternalError("no ones-orthogonal eigenvector at a lambda3 value");
            w.mu = 0;
            w.f = Eigen::VectorXd::Zero(m);
            w.g = *g0;
            break;
        }
        default:
            throw InternalError("make_witness: not a stationary-set source");
    }
    return w;
}

}  // namespace

QecResult qec_join_empty(int m, const Graph& g) {
    const LambdaSets sets = compute_lambda_sets(m, g);
    const auto [alpha, src] = sets.minimum();
    if (!std::isfinite(alpha))
        throw InternalError("all stationary sets are empty for m=" + std::to_string(m));
    if (!(alpha < -1))
        throw InternalError("minimal stationary value " + std::to_string(alpha) +
                            " is not below -1 for a non-complete join");
    QecResult r;
    r.alpha = alpha;
    r.value = -alpha - 2;
    r.source = src;
    r.witness = make_witness(m, g, alpha, src);
    return r;
}

QecResult qec_k1_regular(const Graph& g) {
    auto kappa = g.regular_degree();
    if (!kappa || *kappa < 1) throw InvalidArgument("qec_k1_regular: graph is not regular of degree >= 1");
    const double n = g.order();
    const Spectrum spec = eigen_sym(g.adjacency().cast<double>());
    const double stationary = -(*kappa + 2.0) / (n + 1);
    const double eigen_branch = -spec.values.back() - 2;
    QecResult r;
    const bool first = stationary >= eigen_branch;
    r.source = first ? QecSource::lambda1 : QecSource::lambda3;
    r.alpha = -(first ? stationary : eigen_branch) - 2;
    r.value = -r.alpha - 2;
    return r;
}

}  // namespace qec
