#pragma once

#include <optional>
#include <string_view>

#include "qec/graph_expr.hpp"
#include "qec/join_qec.hpp"

namespace qec {

enum class Method { automatic, oracle, join, fan };

std::optional<Method> method_from_string(std::string_view s);
std::string_view to_string(Method m);

struct Solution {
    QecResult result;
    Method used = Method::oracle;
    std::optional<LambdaSets> sets;  // join solver only
};

/// automatic: fan for join(empty:1, path:n), the stationary-set solver for
/// join(empty:m, G) unless that join is complete, the oracle otherwise.
/// join / fan throw InvalidArgument when the expression lacks their shape.
Solution solve(const GraphExpr& expr, Method method);

}  // namespace qec
