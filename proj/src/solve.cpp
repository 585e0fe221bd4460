#include "qec/solve.hpp"

#include "qec/error.hpp"
#include "qec/fan.hpp"

namespace qec {
namespace {

Solution by_join(const JoinEmptyShape& shape) {
    const Graph g = evaluate(*shape.rest);
    Solution s;
    s.used = Method::join;
    s.sets = compute_lambda_sets(shape.m, g);
    s.result = qec_join_empty(shape.m, g);
    return s;
}

Solution by_fan(int n) {
    Solution s;
    s.used = Method::fan;
    s.result = qec_fan(n);
    return s;
}

Solution by_oracle(const GraphExpr& expr) {
    Solution s;
    s.used = Method::oracle;
    s.result = qec_oracle(evaluate(expr));
    return s;
}

bool complete_join(const JoinEmptyShape& shape) {
    return shape.m == 1 && evaluate(*shape.rest).is_complete();
}

}  // namespace

std::optional<Method> method_from_string(std::string_view s) {
    if (s == "auto") return Method::automatic;
    if (s == "oracle") return Method::oracle;
    if (s == "join") return Method::join;
    if (s == "fan") return Method::fan;
    return std::nullopt;
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::oracle: return "oracle";
        case Method::join: return "join";
        case Method::fan: return "fan";
    }
    return "?";
}

Solution solve(const GraphExpr& expr, Method method) {
    switch (method) {
        case Method::oracle:
            return by_oracle(expr);
        case Method::fan:
            if (auto n = match_fan(expr)) return by_fan(*n);
            throw InvalidArgument("--method fan needs join(empty:1, path:n)");
        case Method::join:
            if (auto shape = match_join_empty(expr)) return by_join(*shape);
            throw InvalidArgument("--method join needs join(empty:m, G)");
        case Method::automatic:
            break;
    }
    if (auto n = match_fan(expr)) return by_fan(*n);
    if (auto shape = match_join_empty(expr); shape && !complete_join(*shape)) return by_join(*shape);
    return by_oracle(expr);
}

}  // namespace qec
