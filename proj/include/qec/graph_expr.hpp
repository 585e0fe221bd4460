#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "qec/graph.hpp"

namespace qec {

/// Parsed graph expression.
///
///     expr := family ":" int
///           | "join(" expr "," expr ")"
///           | "edgelist(" path ")"
///
/// Whitespace between tokens is ignored. An edge-list path runs up to the
/// closing parenthesis and is trimmed.
struct GraphExpr {
    struct FamilyNode {
        Family kind;
        int n;
    };
    struct JoinNode {
        std::shared_ptr<const GraphExpr> left, right;
    };
    struct EdgeListNode {
        std::string path;
    };

    std::variant<FamilyNode, JoinNode, EdgeListNode> node;

    const FamilyNode* as_family() const { return std::get_if<FamilyNode>(&node); }
    const JoinNode* as_join() const { return std::get_if<JoinNode>(&node); }
};

/// Syntax only; families are not instantiated and files are not opened.
GraphExpr parse_expr(std::string_view text);

/// Builds the graph an expression describes.
Graph evaluate(const GraphExpr& expr);

/// parse_expr followed by evaluate.
Graph parse_graph_expr(std::string_view text);

/// Canonical text form: "family:n", "join(a, b)", "edgelist(path)".
std::string render(const GraphExpr& expr);

/// Recognised solver shapes.
struct JoinEmptyShape {
    int m;
    std::shared_ptr<const GraphExpr> rest;
};
/// Top-level join(empty:m, G).
std::optional<JoinEmptyShape> match_join_empty(const GraphExpr& expr);
/// Top-level join(empty:1, path:n); returns n.
std::optional<int> match_fan(const GraphExpr& expr);

}  // namespace qec
