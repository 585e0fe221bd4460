// qec — quadratic embedding constants of graph joins and fans.
//
//   qec <expr> [--method auto|oracle|join|fan] [--json]
//   qec table <fan-qec|phi|rn|partial-cheb> <n_max> [--format csv|json]
//   qec verify <suite> [--seed S] [--n-max N]
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 precondition
// error, 4 internal error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qec/chebyshev.hpp"
#include "qec/error.hpp"
#include "qec/fan.hpp"
#include "qec/graph_expr.hpp"
#include "qec/output.hpp"
#include "qec/parallel.hpp"
#include "qec/solve.hpp"
#include "qec/verify.hpp"

namespace {

using namespace qec;

enum Exit { ok = 0, verification_failed = 1, parse_error = 2, precondition = 3, internal = 4 };

int cmd_qec(const std::string& text, const std::string& method_name, bool as_json) {
    const GraphExpr expr = parse_expr(text);
    const Method method = *method_from_string(method_name);

    const auto t0 = std::chrono::steady_clock::now();
    const Solution s = solve(expr, method);
    const auto t1 = std::chrono::steady_clock::now();

    OutputRecord r;
    r.kind = "qec";
    r.input = render(expr);
    r.value = s.result.value;
    r.alpha = s.result.alpha;
    r.source = std::string(to_string(s.result.source));
    if (s.sets) r.lambda_sets = to_record_sets(*s.sets);
    r.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (as_json) {
        std::cout << to_json(r) << '\n';
        return ok;
    }
    std::cout << "graph:  " << r.input << '\n'
              << "value:  " << format15(*r.value) << '\n'
              << "alpha:  " << format15(*r.alpha) << '\n'
              << "source: " << *r.source << '\n'
              << "method: " << to_string(s.used) << '\n';
    return ok;
}

OutputRecord table_row(const std::string& kind, int n) {
    OutputRecord r;
    r.kind = kind;
    r.input = std::to_string(n);
    r.n = n;
    if (kind == "fan-qec") {
        const QecResult q = qec_fan(n);
        r.value = q.value;
        r.alpha = q.alpha;
        r.source = std::string(to_string(q.source));
    } else if (kind == "phi") {
        r.polynomials.emplace_back("phi", phi(n));
    } else if (kind == "rn") {
        r.polynomials.emplace_back("rn", r_poly(n));
    } else {
        auto [ue, uo] = partial_chebyshev(n);
        r.polynomials.emplace_back("ue", std::move(ue));
        r.polynomials.emplace_back("uo", std::move(uo));
    }
    return r;
}

int cmd_table(const std::string& kind, int n_max, const std::string& format) {
    if (n_max < 1) throw InvalidArgument("table: n_max must be >= 1");
    const auto rows = ordered_map(static_cast<std::size_t>(n_max),
                                  [&](std::size_t i) { return table_row(kind, static_cast<int>(i) + 1); });
    std::cout << (format == "json" ? to_json_array(rows) + "\n" : to_csv(rows));
    return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int n_max) {
    VerifyOptions o;
    o.seed = seed;
    if (n_max > 0) o.n_max = n_max;
    const Report r = run_suite(suite, o);
    std::cout << format_report(r);
    return r.passed() ? ok : verification_failed;
}

int run(int argc, char** argv) {
    // A first argument that is not a subcommand is a graph expression.
    std::vector<std::string> args(argv + 1, argv + argc);
    const bool sub = !args.empty() && (args[0] == "table" || args[0] == "verify" || args[0] == "qec" ||
                                       args[0] == "-h" || args[0] == "--help");
    if (!args.empty() && !sub) args.insert(args.begin(), "qec");

    CLI::App app{"Quadratic embedding constants of graph joins and fans"};
    app.require_subcommand(1);

    std::string expr, method = "auto";
    bool as_json = false;
    auto* q = app.add_subcommand("qec", "QE constant of a graph expression (the subcommand name may be omitted)");
    q->add_option("expr", expr, "e.g. \"join(empty:2, path:3)\"")->required();
    q->add_option("--method", method)->check(CLI::IsMember({"auto", "oracle", "join", "fan"}));
    q->add_flag("--json", as_json);

    std::string kind, format = "csv";
    int n_max = 0;
    auto* t = app.add_subcommand("table", "Tables over n = 1..n_max");
    t->add_option("kind", kind)->required()->check(CLI::IsMember({"fan-qec", "phi", "rn", "partial-cheb"}));
    t->add_option("n_max", n_max)->required();
    t->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::string suite;
    std::uint64_t seed = 0;
    int verify_n = 0;
    auto* v = app.add_subcommand("verify", "Run an invariant suite");
    v->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    v->add_option("--seed", seed);
    v->add_option("--n-max", verify_n, "suite-specific size bound (default: suite default)");

    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    if (*q) return cmd_qec(expr, method, as_json);
    if (*t) return cmd_table(kind, n_max, format);
    return cmd_verify(suite, seed, verify_n);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return parse_error;
    } catch (const InvalidArgument& e) {
        std::fprintf(stderr, "precondition error: %s\n", e.what());
        return precondition;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return internal;
    }
}
