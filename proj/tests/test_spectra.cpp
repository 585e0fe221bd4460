#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/QR>

#include "qec/error.hpp"
#include "qec/graph_expr.hpp"
#include "qec/spectra.hpp"

using namespace qec;
using doctest::Approx;

namespace {

Graph g(const char* expr) { return parse_graph_expr(expr); }

Eigen::MatrixXd adj(const char* expr) { return g(expr).adjacency().cast<double>(); }

void check_spectrum(const Eigen::MatrixXd& m, const Spectrum& s) {
    const int n = static_cast<int>(m.rows());
    REQUIRE(s.dimension() == n);
    const Eigen::MatrixXd gram = s.vectors.transpose() * s.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int k = 0; k < n; ++k) {
        CHECK((m * s.vectors.col(k) - s.values[k] * s.vectors.col(k)).norm() <= 1e-9 * (1 + std::abs(s.values[k])));
        if (k) CHECK(s.values[k - 1] >= s.values[k]);
    }
}

}  // namespace

TEST_CASE("eigen_sym examples") {
    const Spectrum p3 = eigen_sym(adj("path:3"));
    CHECK(p3.values[0] == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(p3.values[1]) <= 1e-14);
    CHECK(p3.values[2] == Approx(-std::sqrt(2.0)).epsilon(1e-14));

    const Spectrum c4 = eigen_sym(adj("cycle:4"));
    const double want[] = {2, 0, 0, -2};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(c4.values[k] - want[k]) <= 1e-14);

    const Spectrum z = eigen_sym(Eigen::MatrixXd::Zero(3, 3));
    for (double v : z.values) CHECK(v == 0);
    CHECK(z.vectors == Eigen::MatrixXd::Identity(3, 3));
}

TEST_CASE("eigen_sym invariants on random symmetric matrices") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 12;
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = nd(rng);
        const Spectrum s = eigen_sym(m);
        check_spectrum(m, s);
        // Deterministic for fixed input.
        const Spectrum again = eigen_sym(m);
        CHECK(again.values == s.values);
        CHECK(again.vectors == s.vectors);
    }
    for (const char* e : {"cycle:8", "complete:6", "join(empty:3, cycle:5)", "path:12"})
        check_spectrum(adj(e), eigen_sym(adj(e)));
}

TEST_CASE("eigen_sym rejects non-symmetric or non-square input") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    m(0, 1) = 1;
    CHECK_THROWS_AS(eigen_sym(m), InvalidArgument);
    CHECK_THROWS_AS(eigen_sym(Eigen::MatrixXd::Zero(2, 3)), InvalidArgument);
    m(1, 0) = 1 + 1e-14;  // within the symmetry tolerance
    CHECK_NOTHROW(eigen_sym(m));
}

TEST_CASE("eigenvalue clusters") {
    const auto cs = cluster_eigenvalues(eigen_sym(adj("cycle:4")));
    REQUIRE(cs.size() == 3);
    CHECK(cs[1].count == 2);
    CHECK(std::abs(cs[1].value) <= 1e-12);
}

TEST_CASE("eigenspace orthogonal to ones") {
    const Spectrum p3 = eigen_sym(adj("path:3"));
    CHECK_FALSE(eigenspace_orthogonal_to_ones(p3, std::sqrt(2.0)));
    CHECK(eigenspace_orthogonal_to_ones(p3, 0.0));

    const Spectrum p4 = eigen_sym(adj("path:4"));
    CHECK(eigenspace_orthogonal_to_ones(p4, 2 * std::cos(2 * M_PI / 5)));
    CHECK_FALSE(eigenspace_orthogonal_to_ones(p4, 2 * std::cos(M_PI / 5)));

    const Spectrum c4 = eigen_sym(adj("cycle:4"));
    CHECK(eigenspace_orthogonal_to_ones(c4, 0.0));
    const auto v = ones_orthogonal_eigenvector(c4, 0.0);
    REQUIRE(v);
    CHECK(std::abs(v->sum()) <= 1e-12);
    CHECK(v->norm() == Approx(1.0));

    CHECK_THROWS_AS(eigenspace_orthogonal_to_ones(c4, 1.0), InvalidArgument);
    CHECK_FALSE(ones_orthogonal_eigenvector(c4, 2.0));
}

TEST_CASE("ones complement basis") {
    for (int n : {2, 3, 7, 20}) {
        const Eigen::MatrixXd q = ones_complement_basis(n);
        CHECK(q.rows() == n);
        CHECK(q.cols() == n - 1);
        CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK((q.transpose() * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("oracle examples") {
    const QecResult k2 = qec_oracle(g("complete:2"));
    CHECK(k2.value == Approx(-1.0).epsilon(1e-14));
    CHECK(k2.source == QecSource::oracle);
    CHECK(k2.alpha == -k2.value - 2);
    CHECK(qec_oracle(g("join(empty:2, complete:2)")).value == Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(qec_oracle(g("join(empty:1, cycle:4)")).value) <= 1e-12);

    CHECK_THROWS_AS(qec_oracle(g("path:1")), InvalidArgument);
    CHECK_THROWS_AS(qec_oracle(g("empty:3")), NotConnected);
}

TEST_CASE("oracle on complete graphs") {
    for (int n = 2; n <= 12; ++n) CHECK(std::abs(qec_oracle(family(Family::complete, n)).value + 1) <= 1e-10);
}

TEST_CASE("oracle fan monotonicity (isometric subgraphs)") {
    for (int n = 1; n <= 12; ++n) {
        const double a = qec_oracle(join(family(Family::empty, 1), family(Family::path, n))).value;
        const double b = qec_oracle(join(family(Family::empty, 1), family(Family::path, n + 1))).value;
        CHECK(a <= b + 1e-10);
    }
}

TEST_CASE("oracle is basis independent") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    for (const char* e : {"cycle:5", "join(empty:3, path:4)", "path:7", "join(complete:2, cycle:6)"}) {
        const DistanceMatrix d = distance_matrix(g(e));
        const int n = d.order();
        // Random orthonormal basis of 1-perp: rotate the Householder basis.
        Eigen::MatrixXd r(n - 1, n - 1);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) r(i, j) = nd(rng);
        const Eigen::MatrixXd rot = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
        const Eigen::MatrixXd q2 = ones_complement_basis(n) * rot;
        CHECK(std::abs(qec_oracle_with_basis(d, ones_complement_basis(n)) - qec_oracle_with_basis(d, q2)) <= 1e-10);
        CHECK(std::abs(qec_oracle_with_basis(d, q2) - qec_oracle(g(e)).value) <= 1e-10);
    }
}

TEST_CASE("oracle lower bound -1, attained only by complete graphs") {
    std::mt19937_64 rng(21);
    std::bernoulli_distribution coin(0.6);
    int tested = 0;
    while (tested < 60) {
        const int n = 2 + tested % 7;
        std::vector<Graph::Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        const Graph gr(n, e);
        if (!gr.is_connected()) continue;
        const double v = qec_oracle(gr).value;
        CHECK(v >= -1 - 1e-10);
        if (!gr.is_complete()) CHECK(v > -1 + 1e-10);
        ++tested;
    }
}

TEST_CASE("witness residuals and objective") {
    // A hand-built stationary point of the diamond (Example: alpha = -3/2).
    // f = c 1 on the empty side, g = d 1 on K2; balance forces c = -d.
    StationaryWitness w;
    w.alpha = -1.5;
    w.f = Eigen::VectorXd::Constant(2, 0.5);
    w.g = Eigen::VectorXd::Constant(2, -0.5);
    // (A1 - J - alpha I) f = (-2 + 1.5) * 0.5 = -0.25  =>  mu/2 = 0.25
    w.mu = 0.5;
    const auto r = witness_residuals(w, IntMatrix::Zero(2, 2), family(Family::complete, 2).adjacency());
    CHECK(r.normalization <= 1e-15);
    CHECK(r.balance <= 1e-15);
    CHECK(r.equation_f <= 1e-15);
    CHECK(r.equation_g <= 1e-15);
    CHECK(witness_objective(w, family(Family::empty, 2), family(Family::complete, 2)) == Approx(w.lambda()));
}

TEST_CASE("source tags") {
    for (QecSource s : {QecSource::oracle, QecSource::lambda0, QecSource::lambda1, QecSource::lambda2,
                        QecSource::lambda3, QecSource::fan_closed_form})
        CHECK(source_from_string(to_string(s)) == s);
    CHECK(to_string(QecSource::fan_closed_form) == "fan-closed-form");
    CHECK_FALSE(source_from_string("Lambda9"));
}
