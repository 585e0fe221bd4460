#include "qec/fan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qec/chebyshev.hpp"
#include "qec/error.hpp"
#include "qec/roots.hpp"

namespace qec {
namespace {

using std::numbers::pi;

// Index l in [1, n] with lambda = 2cos(l pi/(n+1)) within tol, or 0.
int eigen_index(int n, double lambda, double tol) {
    if (std::abs(lambda) >= 2) return 0;
    const double theta = std::acos(lambda / 2);
    const int l = static_cast<int>(std::lround(theta * (n + 1) / pi));
    if (l < 1 || l > n) return 0;
    return std::abs(lambda - 2 * std::cos(l * pi / (n + 1))) <= tol ? l : 0;
}

Rational to_rational(double x) {
    Rational r(x);  // exact: every double is a dyadic rational
    r.canonicalize();
    return r;
}

}  // namespace

RecurrenceSolution solve_recurrence(int n, double lambda, double mu, double eigen_tol) {
    if (n < 1) throw InvalidArgument("solve_recurrence: n must be positive");
    RecurrenceSolution s;
    s.values.assign(n + 2, 0.0);
    const double np1 = n + 1;

    if (std::abs(lambda - 2) <= eigen_tol) {
        s.kind = RecurrenceSolution::Kind::unique;
        for (int k = 0; k <= n + 1; ++k) s.values[k] = -(mu / 2) * np1 * k + (mu / 2) * k * k;
        s.values[n + 1] = 0;
        return s;
    }
    if (std::abs(lambda + 2) <= eigen_tol) {
        s.kind = RecurrenceSolution::Kind::unique;
        const double c = mu * (1 + (n % 2 == 0 ? 1 : -1)) / (4 * np1);
        for (int k = 0; k <= n + 1; ++k) {
            const double sk = (k % 2 == 0) ? 1 : -1;
            s.values[k] = (mu / 4) * (1 - sk) + c * sk * k;
        }
        s.values[n + 1] = 0;
        return s;
    }

    if (const int l = eigen_index(n, lambda, eigen_tol)) {
        const double theta = l * pi / np1;
        s.direction.assign(n + 2, 0.0);
        for (int k = 1; k <= n; ++k) s.direction[k] = std::sin(k * theta);
        if (mu == 0) {
            s.kind = RecurrenceSolution::Kind::family;
            return s;
        }
        if (l % 2 == 1) {
            s.kind = RecurrenceSolution::Kind::none;
            s.values.clear();
            s.direction.clear();
            return s;
        }
        s.kind = RecurrenceSolution::Kind::family;
        const double lam = 2 * std::cos(theta);
        for (int k = 1; k <= n; ++k) s.values[k] = mu / (2 - lam) * (1 - std::cos(k * theta));
        return s;
    }

    s.kind = RecurrenceSolution::Kind::unique;
    const double scale = mu / (2 - lambda);
    if (std::abs(lambda) < 2) {
        const double theta = std::acos(lambda / 2);
        const double denom = std::cos(np1 * theta / 2);
        for (int k = 1; k <= n; ++k)
            s.values[k] = scale * (1 - std::cos((k - np1 / 2) * theta) / denom);
    } else {
        // xi is the characteristic root with |xi| > 1, eta = 1/xi.
        const double xi = (lambda + std::copysign(std::sqrt(lambda * lambda - 4), lambda)) / 2;
        const double tail = 1 + std::pow(xi, -(n + 1));
        for (int k = 1; k <= n; ++k) {
            const double a = std::pow(xi, k - n - 1) / tail;  // xi^k / (1 + xi^{n+1})
            const double b = std::pow(xi, -k) / tail;         // eta^k / (1 + eta^{n+1})
            s.values[k] = scale * (1 - a - b);
        }
    }
    return s;
}

double recurrence_residual(const std::vector<double>& f, double lambda, double mu) {
    if (f.size() < 3) throw InvalidArgument("recurrence_residual: need f_0..f_{n+1} with n >= 1");
    double r = std::max(std::abs(f.front()), std::abs(f.back()));
    for (std::size_t k = 0; k + 2 < f.size(); ++k)
        r = std::max(r, std::abs(f[k + 2] - lambda * f[k + 1] + f[k] - mu));
    return r;
}

PathEigenpair path_eigen(int n, int l) {
    if (n < 1) throw InvalidArgument("path_eigen: n must be positive");
    if (l < 1 || l > n) throw InvalidArgument("path_eigen: l must lie in [1, n]");
    const double theta = l * pi / (n + 1);
    PathEigenpair e;
    e.alpha = 2 * std::cos(theta);
    e.vector.resize(n);
    for (int k = 1; k <= n; ++k) e.vector[k - 1] = std::sin(k * theta);
    e.orthogonal_to_ones = (l % 2 == 0);
    return e;
}

double phi_minimal_root(int n, double tol) {
    const RootIsolation iso = sturm_isolate(phi(n));
    if (iso.roots.empty()) throw InternalError("Phi_" + std::to_string(n) + " has no real root");
    return refine_root(iso.square_free, iso.roots.front(), tol);
}

QecResult qec_fan(int n) {
    if (n < 1) throw InvalidArgument("qec_fan: n must be positive");
    QecResult r;
    r.source = QecSource::fan_closed_form;
    if (n <= 2) {
        r.value = -1;
        r.alpha = -1;
        return r;
    }
    if (n % 2 == 0) {
        const double s = std::sin(pi / (2 * (n + 1)));
        r.value = -4 * s * s;
        r.alpha = -r.value - 2;
        return r;
    }

    // One simple root of Phi_n in (-2, -2cos(pi/(n+1))). Phi_n(-2) < 0 and
    // Phi_n > 0 at the upper end; both signs and the root count are exact.
    const IntPoly p = phi(n);
    const Rational lo(-2);
    const Rational hi = to_rational(-2 * std::cos(pi / (n + 1)));
    if (p.sign_at(lo) >= 0 || p.sign_at(hi) <= 0)
        throw InternalError("Phi_" + std::to_string(n) + " has no sign change on its bracket");
    if (SturmSequence(p).count(lo, hi) != 1)
        throw InternalError("Phi_" + std::to_string(n) + " bracket does not isolate one root");
    r.alpha = refine_root(p, IsolatedRoot{lo, hi, 1}, 1e-15);
    r.value = -r.alpha - 2;
    return r;
}

LambdaSets fan_lambda_sets(int n) {
    if (n < 3) throw InvalidArgument("fan_lambda_sets: n must be >= 3");
    LambdaSets out;
    out.m = 1;

    IntPoly p = deflate_common_roots(phi(n), u_tilde(n));
    for (long r : {2L, -2L, 0L, -1L}) p = deflate_root(std::move(p), BigInt(r));
    if (p.degree() >= 1) {
        const RootIsolation iso = sturm_isolate(p);
        for (const auto& root : iso.roots) out.lambda1.push_back(refine_root(iso.square_free, root, 1e-15));
    }

    for (int l = 2; l <= n; l += 2) {
        if (2 * l == n + 1 || 3 * l == 2 * (n + 1)) continue;  // alpha = 0 or -1
        out.lambda3.push_back(2 * std::cos(l * pi / (n + 1)));
    }

    for (int l = 1; l <= n; ++l) out.excluded.push_back(2 * std::cos(l * pi / (n + 1)));
    out.excluded.insert(out.excluded.end(), {0.0, -1.0, -2.0});
    return out;
}

Embedding fan_embedding(int n) {
    if (n < 1) throw InvalidArgument("fan_embedding: n must be positive");
    Embedding e;
    e.points.assign(n + 1, Eigen::VectorXd::Zero(n));
    for (int k = 1; k <= n; ++k) {
        if (k >= 2) e.points[k][k - 2] = std::sqrt((k - 1) / (2.0 * k));
        e.points[k][k - 1] = std::sqrt((k + 1) / (2.0 * k));
    }
    return e;
}

double embedding_residual(const Embedding& e, const DistanceMatrix& d) {
    const int n = static_cast<int>(e.points.size());
    if (d.order() != n) throw InvalidArgument("embedding_residual: size mismatch");
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            r = std::max(r, std::abs((e.points[j] - e.points[k]).squaredNorm() - static_cast<double>(d(j, k))));
    return r;
}

}  // namespace qec
