#include "qec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/LU>
#include <json.hpp>

#include "qec/chebyshev.hpp"
#include "qec/error.hpp"
#include "qec/fan.hpp"
#include "qec/graph_expr.hpp"
#include "qec/join_qec.hpp"
#include "qec/output.hpp"
#include "qec/parallel.hpp"
#include "qec/roots.hpp"
#include "qec/solve.hpp"

namespace qec {
namespace {

using nlohmann::json;
using std::numbers::pi;

class CheckBuilder {
public:
    CheckBuilder(std::string suite, std::string name, double tol) {
        c_.suite = std::move(suite);
        c_.name = std::move(name);
        c_.tolerance = tol;
    }

    // Records one instance; `instance` is only serialised on failure.
    void add(double residual, const std::function<json()>& instance) {
        ++c_.instances;
        if (!std::isnan(residual)) c_.max_residual = std::max(c_.max_residual, residual);
        if (std::isnan(residual) || residual > c_.tolerance) {
            json j = instance();
            j["check"] = c_.suite + "/" + c_.name;
            j["residual"] = residual;
            c_.failures.push_back(j.dump());
        }
    }
    void expect(bool ok, const std::function<json()>& instance) { add(ok ? 0.0 : 1.0, instance); }

    // An exception inside an instance is a failure of that instance.
    template <class Fn>
    void guard(const std::function<json()>& instance, Fn fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            json j = instance();
            j["error"] = e.what();
            ++c_.instances;
            j["check"] = c_.suite + "/" + c_.name;
            c_.failures.push_back(j.dump());
        }
    }

    Check done() { return std::move(c_); }

private:
    Check c_;
};

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"order", g.order()}, {"edges", edges}, {"label", g.label()}};
}

Graph empty_graph(int m) { return family(Family::empty, m); }

Graph path(int n) { return family(Family::path, n); }

// ---------------------------------------------------------------- oracle-join

void oracle_join_suite(const VerifyOptions& o, std::vector<Check>& out) {
    const int max_order = o.n_max.value_or(7);
    const std::vector<Graph> corpus = join_corpus(o.seed, 200, max_order);

    struct Instance {
        int m;
        const Graph* g;
    };
    std::vector<Instance> inst;
    for (const Graph& g : corpus)
        for (int m = 1; m <= 3; ++m)
            if (!(m == 1 && g.is_complete())) inst.push_back({m, &g});

    struct Outcome {
        std::string error;
        double diff = 0, witness = 0, objective = 0, separation = 0;
    };
    const auto results = ordered_map(inst.size(), [&](std::size_t i) {
        Outcome r;
        try {
            const auto [m, g] = inst[i];
            const QecResult j = qec_join_empty(m, *g);
            const QecResult oracle = qec_oracle(join(empty_graph(m), *g));
            r.diff = std::abs(j.value - oracle.value);
            const auto res = witness_residuals(*j.witness, IntMatrix::Zero(m, m), g->adjacency());
            r.witness = std::max({res.normalization, res.balance, res.equation_f, res.equation_g});
            r.objective = std::abs(witness_objective(*j.witness, empty_graph(m), *g) - j.value);
            // Lambda1 members must sit clear of the excluded points.
            const LambdaSets sets = compute_lambda_sets(m, *g);
            double closest = INFINITY;
            for (double a : sets.lambda1)
                for (double e : sets.excluded) closest = std::min(closest, std::abs(a - e));
            r.separation = closest > 1e-9 ? 0 : 1;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    });

    CheckBuilder diff("oracle-join", "join-vs-oracle", 1e-8);
    CheckBuilder wit("oracle-join", "witness-residual", 1e-8);
    CheckBuilder obj("oracle-join", "witness-objective", 1e-8);
    CheckBuilder sep("oracle-join", "lambda1-separation", 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        auto desc = [&] { return json{{"m", inst[i].m}, {"graph", graph_json(*inst[i].g)}}; };
        if (!results[i].error.empty()) {
            diff.guard(desc, [&] { throw InternalError(results[i].error); });
            continue;
        }
        diff.add(results[i].diff, desc);
        wit.add(results[i].witness, desc);
        obj.add(results[i].objective, desc);
        sep.add(results[i].separation, desc);
    }
    out.push_back(diff.done());
    out.push_back(wit.done());
    out.push_back(obj.done());
    out.push_back(sep.done());

    // The regular closed form for K_1 + G.
    CheckBuilder reg("oracle-join", "k1-regular-closed-form", 1e-8);
    for (const Graph& g : corpus) {
        auto kappa = g.regular_degree();
        if (!kappa || *kappa < 1) continue;
        auto desc = [&] { return json{{"graph", graph_json(g)}}; };
        reg.guard(desc, [&] {
            reg.add(std::abs(qec_k1_regular(g).value - qec_oracle(join(empty_graph(1), g)).value), desc);
        });
    }
    out.push_back(reg.done());

    // The default dispatch agrees with the oracle on the family corpus.
    CheckBuilder autom("oracle-join", "auto-vs-oracle", 1e-8);
    std::vector<std::string> exprs;
    for (int k = 1; k <= 8; ++k) {
        std::vector<std::string> base{"path:" + std::to_string(k), "complete:" + std::to_string(k),
                                      "empty:" + std::to_string(k)};
        if (k >= 3) base.push_back("cycle:" + std::to_string(k));
        for (const auto& b : base) {
            if (b.rfind("empty", 0) != 0 || k == 1) exprs.push_back(b);
            for (int m = 1; m <= 3; ++m) exprs.push_back("join(empty:" + std::to_string(m) + ", " + b + ")");
        }
    }
    for (const auto& e : exprs) {
        auto desc = [&] { return json{{"expr", e}}; };
        autom.guard(desc, [&] {
            const GraphExpr ex = parse_expr(e);
            if (evaluate(ex).order() < 2) return;  // the oracle needs two vertices
            autom.add(std::abs(solve(ex, Method::automatic).result.value - solve(ex, Method::oracle).result.value),
                      desc);
        });
    }
    out.push_back(autom.done());
}

// ---------------------------------------------------------------- fan

void fan_suite(const VerifyOptions& o, std::vector<Check>& out) {
    const int n_max = o.n_max.value_or(30);
    const int root_max = 2 * n_max;

    CheckBuilder vs_oracle("fan", "fan-vs-oracle", 1e-8);
    CheckBuilder vs_join("fan", "fan-vs-join", 1e-10);
    CheckBuilder sets("fan", "lambda-sets-vs-join", 1e-8);
    for (int n = 1; n <= n_max; ++n) {
        auto desc = [&] { return json{{"n", n}}; };
        vs_oracle.guard(desc, [&] {
            vs_oracle.add(std::abs(qec_fan(n).value - qec_oracle(join(empty_graph(1), path(n))).value), desc);
        });
        if (n < 3) continue;
        vs_join.guard(desc, [&] { vs_join.add(std::abs(qec_fan(n).value - qec_join_empty(1, path(n)).value), desc); });
        sets.guard(desc, [&] {
            const LambdaSets a = fan_lambda_sets(n), b = compute_lambda_sets(1, path(n));
            const std::vector<double>* sa[] = {&a.lambda0, &a.lambda1, &a.lambda2, &a.lambda3};
            const std::vector<double>* sb[] = {&b.lambda0, &b.lambda1, &b.lambda2, &b.lambda3};
            double worst = 0;
            for (int i = 0; i < 4; ++i) {
                std::vector<double> x = *sa[i], y = *sb[i];
                if (x.size() != y.size()) {
                    worst = INFINITY;
                    break;
                }
                std::sort(x.begin(), x.end());
                std::sort(y.begin(), y.end());
                for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
            }
            sets.add(worst, desc);
        });
    }
    out.push_back(vs_oracle.done());
    out.push_back(vs_join.done());
    out.push_back(sets.done());

    // Root-based checks are cheap, so they run over twice the range.
    const auto alphas = ordered_map(static_cast<std::size_t>(root_max), [](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        return std::pair{qec_fan(n).alpha, phi_minimal_root(n)};
    });
    auto alpha = [&](int n) { return alphas[n - 1].first; };

    CheckBuilder even("fan", "even-closed-form", 1e-10);
    CheckBuilder odd("fan", "odd-sandwich", 0);
    CheckBuilder agree("fan", "bracket-vs-global-root", 1e-12);
    for (int n = 1; n <= root_max; ++n) {
        auto desc = [&] { return json{{"n", n}, {"alpha", alpha(n)}}; };
        agree.add(std::abs(alpha(n) - alphas[n - 1].second), desc);
        if (n % 2 == 0) {
            even.add(std::abs(alphas[n - 1].second + 2 * std::cos(pi / (n + 1))), desc);
        } else if (n >= 3) {
            const double lower = -2 * std::cos(pi / (n + 2)), upper = -2 * std::cos(pi / (n + 1));
            odd.add(std::max(0.0, lower - alpha(n)) + (alpha(n) < upper ? 0.0 : 1.0), desc);
        }
    }
    out.push_back(agree.done());
    out.push_back(even.done());
    out.push_back(odd.done());

    CheckBuilder mono("fan", "monotone", 1e-12);
    mono.expect(alpha(1) == -1 && alpha(2) == -1, [] { return json{{"n", 2}}; });
    int ties = 0;
    for (int n = 1; n < root_max; ++n) {
        mono.add(std::max(0.0, alpha(n + 1) - alpha(n)), [&] { return json{{"n", n}}; });
        if (n >= 2 && alpha(n + 1) >= alpha(n)) ++ties;
    }
    mono.expect(alpha(root_max) > -2, [&] { return json{{"n", root_max}}; });
    Check m = mono.done();
    if (ties) m.name += " (non-strict at " + std::to_string(ties) + " step(s))";
    out.push_back(std::move(m));

    // Summing the path recurrence solution reproduces <1, (A - alpha I)^{-1} 1> = q/p.
    CheckBuilder sum_check("fan", "recurrence-sum-vs-quadratic-form", 1e-9);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> lam(-3.0, 3.0);
    for (int n = 1; n <= n_max; ++n) {
        const auto [p, q] = ones_quadratic_form_poly(path(n).adjacency());
        for (int t = 0; t < 3; ++t) {
            const double a = lam(rng);
            auto desc = [&] { return json{{"n", n}, {"alpha", a}}; };
            const RecurrenceSolution s = solve_recurrence(n, a, 1.0);
            if (s.kind != RecurrenceSolution::Kind::unique) continue;
            double sum = 0;
            for (double v : s.values) sum += v;
            // exact at the rational value of the double a
            const Rational ar(a);
            const double ratio = Rational(q(ar) / p(ar)).get_d();
            sum_check.add(std::abs(sum - ratio) / std::max(1.0, std::abs(ratio)), desc);
        }
    }
    out.push_back(sum_check.done());
}

// ---------------------------------------------------------------- chebyshev

IntPoly u_ext(int n) { return n == -2 ? IntPoly{-1} : u_tilde(n); }

// Factor of Phi_n complementary to ue_n, written out directly.
IntPoly q_closed_form(int n) {
    const int k = n / 2;
    const IntPoly two_x_4{4, 2};
    if (n % 2 == 0) {
        const IntPoly quad(std::vector<BigInt>{BigInt(-8 * k), BigInt(-6), BigInt(2 * k + 1)});
        return quad * (u_ext(k) - u_ext(k - 1)) + two_x_4 * (u_ext(k - 1) - u_ext(k - 2));
    }
    const IntPoly quad(std::vector<BigInt>{BigInt(-4 * (2 * k + 1)), BigInt(-6), BigInt(2 * k + 2)});
    return quad * (u_ext(k + 1) - u_ext(k - 1)) + two_x_4 * (u_ext(k) - u_ext(k - 2));
}

// Phi_n(x) in floating point via the three-term recurrence.
double phi_numeric(int n, double x) {
    double prev = 0, cur = 1;
    for (int k = 0; k < n; ++k) {
        const double next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return ((n + 1) * x * x - 6 * x - 4.0 * n) * cur + 2 * (x + 2) * prev + 2 * (x + 2);
}

const char* const kRnTable[] = {
    "2x+2",
    "3x+3",
    "4x^2+10x+6",
    "5x^2+9x+3",
    "6x^3+18x^2+12x-2",
    "7x^3+15x^2+2x-7",
    "8x^4+26x^3+14x^2-20x-14",
    "9x^4+21x^3-3x^2-26x-7",
    "10x^5+34x^4+12x^3-54x^2-42x+2",
    "11x^5+27x^4-12x^3-57x^2-15x+11",
};

void chebyshev_suite(const VerifyOptions& o, std::vector<Check>& out) {
    const int n_max = o.n_max.value_or(50);
    const IntPoly x_minus_2_sq{4, -4, 1};

    CheckBuilder split("chebyshev", "u-equals-ue-times-uo", 0);
    CheckBuilder fact("chebyshev", "phi-factorisation", 0);
    CheckBuilder qform("chebyshev", "q-closed-form", 0);
    CheckBuilder at2("chebyshev", "phi-double-zero-at-2", 0);
    CheckBuilder atm2("chebyshev", "phi-at-minus-2", 0);
    CheckBuilder roots("chebyshev", "phi-real-roots", 0);
    CheckBuilder cosv("chebyshev", "phi-at-path-eigenvalues", 1e-9);
    CheckBuilder modo("chebyshev", "phi-congruent-4x+8-mod-uo", 0);
    for (int n = 1; n <= n_max; ++n) {
        auto desc = [&] { return json{{"n", n}}; };
        const auto [ue, uo] = partial_chebyshev(n);
        split.expect(ue * uo == u_tilde(n), desc);
        const IntPoly p = phi(n);
        fact.guard(desc, [&] { fact.expect(p == x_minus_2_sq * ue * r_poly(n), desc); });
        // At the odd-l path eigenvalues U~_n = 0 and U~_{n-1} = 1, so Phi_n = 4(x+2) there.
        modo.expect(divides(uo, p - IntPoly{8, 4}), desc);
        qform.guard(desc, [&] { qform.expect(q_poly(n) == q_closed_form(n), desc); });
        const IntPoly d2 = p.derivative().derivative();
        at2.expect(sgn(p(BigInt(2))) == 0 && sgn(p.derivative()(BigInt(2))) == 0 && sgn(d2(BigInt(2))) != 0, desc);
        atm2.expect(p(BigInt(-2)) == BigInt(16 * (n + 1) * (n % 2 == 0 ? 1 : -1)), desc);

        roots.guard(desc, [&] {
            const RootIsolation iso = sturm_isolate(p);
            bool ok = iso.with_multiplicity() == n + 2;
            for (const auto& r : iso.roots) {
                const bool is_two = r.hi == Rational(2) || (r.lo < 2 && r.hi > 2);
                if (is_two) ok = ok && r.multiplicity == 2;
                else if (n != 2) ok = ok && r.multiplicity == 1;
            }
            roots.expect(ok, desc);
        });

        for (int l = 1; l <= n; ++l) {
            const double theta = l * pi / (n + 1);
            const double half = std::cos(theta / 2);
            const double expect = (l % 2 == 1) ? 16 * half * half : 0.0;  // 4(x+2) for odd l
            cosv.add(std::abs(phi_numeric(n, 2 * std::cos(theta)) - expect), [&] { return json{{"n", n}, {"l", l}}; });
        }
    }
    out.push_back(split.done());
    out.push_back(fact.done());
    out.push_back(qform.done());
    out.push_back(at2.done());
    out.push_back(atm2.done());
    out.push_back(roots.done());
    out.push_back(cosv.done());
    out.push_back(modo.done());

    CheckBuilder table("chebyshev", "rn-table", 0);
    for (int n = 1; n <= 10; ++n)
        table.expect(r_poly(n).to_string() == kRnTable[n - 1],
                     [&] { return json{{"n", n}, {"got", r_poly(n).to_string()}, {"want", kRnTable[n - 1]}}; });
    out.push_back(table.done());

    CheckBuilder small("chebyshev", "phi1-phi2-factored", 0);
    small.expect(phi(1) == IntPoly{2} * x_minus_2_sq * IntPoly{1, 1}, [] { return json{{"n", 1}}; });
    small.expect(phi(2) == IntPoly{3} * x_minus_2_sq * IntPoly{1, 1} * IntPoly{1, 1}, [] { return json{{"n", 2}}; });
    out.push_back(small.done());
}

// ---------------------------------------------------------------- recurrence

Eigen::VectorXd dense_solve(int n, double lambda, double mu) {
    Eigen::MatrixXd m = path(n).adjacency().cast<double>() - lambda * Eigen::MatrixXd::Identity(n, n);
    return m.partialPivLu().solve(Eigen::VectorXd::Constant(n, mu));
}

void recurrence_suite(const VerifyOptions& o, std::vector<Check>& out) {
    const int n_max = o.n_max.value_or(20);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> nd(1, n_max);
    std::uniform_real_distribution<double> lam(-3.0, 3.0), mud(-2.0, 2.0);

    CheckBuilder dense("recurrence", "unique-vs-dense-solve", 1e-9);
    for (int t = 0; t < 100; ++t) {
        const int n = nd(rng);
        const double l = lam(rng), mu = mud(rng);
        auto desc = [&] { return json{{"n", n}, {"lambda", l}, {"mu", mu}}; };
        const RecurrenceSolution s = solve_recurrence(n, l, mu);
        if (s.kind != RecurrenceSolution::Kind::unique) {
            dense.expect(false, desc);
            continue;
        }
        const Eigen::VectorXd f = dense_solve(n, l, mu);
        double worst = std::max(std::abs(s.values.front()), std::abs(s.values.back()));
        for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(s.values[k] - f[k - 1]));
        dense.add(worst, desc);
    }
    out.push_back(dense.done());

    CheckBuilder pm2("recurrence", "plus-minus-two-closed-forms", 1e-12);
    for (int n = 1; n <= n_max; ++n)
        for (double l : {2.0, -2.0})
            for (double mu : {1.0, -0.5, mud(rng)}) {
                const RecurrenceSolution s = solve_recurrence(n, l, mu);
                pm2.add(s.kind == RecurrenceSolution::Kind::unique ? recurrence_residual(s.values, l, mu) : INFINITY,
                        [&] { return json{{"n", n}, {"lambda", l}, {"mu", mu}}; });
            }
    out.push_back(pm2.done());

    CheckBuilder eig("recurrence", "eigenvalue-cases", 0);
    CheckBuilder fam("recurrence", "family-residual", 1e-9);
    for (int n = 1; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l)
            for (double mu : {0.0, 1.0, mud(rng)}) {
                const double lambda = 2 * std::cos(l * pi / (n + 1));
                auto desc = [&] { return json{{"n", n}, {"l", l}, {"mu", mu}}; };
                const RecurrenceSolution s = solve_recurrence(n, lambda, mu);
                const bool expect_none = mu != 0 && l % 2 == 1;
                eig.expect((s.kind == RecurrenceSolution::Kind::none) == expect_none &&
                               (expect_none || s.kind == RecurrenceSolution::Kind::family),
                           desc);
                if (s.kind != RecurrenceSolution::Kind::family) continue;
                for (double k : {0.0, 1.0, -2.5}) {
                    std::vector<double> f = s.values;
                    for (std::size_t i = 0; i < f.size(); ++i) f[i] += k * s.direction[i];
                    fam.add(recurrence_residual(f, lambda, mu), desc);
                }
            }
    out.push_back(eig.done());
    out.push_back(fam.done());
}

// ---------------------------------------------------------------- embedding

void embedding_suite(const VerifyOptions& o, std::vector<Check>& out) {
    const int n_max = o.n_max.value_or(50);
    CheckBuilder dist("embedding", "squared-distances", 1e-12);
    CheckBuilder unit("embedding", "hub-distance-one", 1e-12);
    for (int n = 1; n <= n_max; ++n) {
        auto desc = [&] { return json{{"n", n}}; };
        const Embedding e = fan_embedding(n);
        dist.add(embedding_residual(e, distance_matrix(join(empty_graph(1), path(n)))), desc);
        double worst = e.points[0].norm();
        for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(e.points[k].squaredNorm() - 1));
        unit.add(worst, desc);
    }
    out.push_back(dist.done());
    out.push_back(unit.done());
}

}  // namespace

bool Report::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle-join", "fan", "chebyshev", "recurrence", "embedding", "all"};
    return names;
}

Report run_suite(std::string_view suite, const VerifyOptions& opts) {
    using Runner = void (*)(const VerifyOptions&, std::vector<Check>&);
    const std::pair<std::string_view, Runner> runners[] = {
        {"oracle-join", oracle_join_suite}, {"fan", fan_suite},           {"chebyshev", chebyshev_suite},
        {"recurrence", recurrence_suite},   {"embedding", embedding_suite},
    };
    Report r;
    bool found = false;
    for (const auto& [name, run] : runners)
        if (suite == "all" || suite == name) {
            run(opts, r.checks);
            found = true;
        }
    if (!found) throw InvalidArgument("unknown verification suite '" + std::string(suite) + "'");
    return r;
}

std::string format_report(const Report& r) {
    std::string out;
    for (const Check& c : r.checks) {
        out += c.passed() ? "PASS " : "FAIL ";
        out += c.suite + "/" + c.name + "  instances=" + std::to_string(c.instances) +
               "  max_residual=" + format15(c.max_residual) + "  tol=" + format15(c.tolerance) + "\n";
        for (const auto& f : c.failures) out += "  replay " + f + "\n";
    }
    int failed = 0;
    for (const Check& c : r.checks) failed += !c.passed();
    out += failed ? std::to_string(failed) + " of " + std::to_string(r.checks.size()) + " checks failed\n"
                  : "all " + std::to_string(r.checks.size()) + " checks passed\n";
    return out;
}

std::vector<Graph> join_corpus(std::uint64_t seed, int random_count, int max_order) {
    if (max_order < 2) throw InvalidArgument("join_corpus: max_order must be >= 2");
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        out.push_back(family(Family::path, n));
        out.push_back(family(Family::complete, n));
        if (n >= 3) out.push_back(family(Family::cycle, n));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, max_order);
    std::uniform_real_distribution<double> density(0.2, 0.9), coin(0.0, 1.0);
    for (int i = 0; i < random_count;) {
        const int n = order(rng);
        const double p = density(rng);
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges), "random:" + std::to_string(i));
        if (!g.is_connected()) continue;
        out.push_back(std::move(g));
        ++i;
    }
    return out;
}

}  // namespace qec
