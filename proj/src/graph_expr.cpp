#include "qec/graph_expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "qec/error.hpp"

namespace qec {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected a family name, join or edgelist", start);
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw ParseError("integer out of range", start);
        return value;
    }

    GraphExpr expr() {
        skip_ws();
        const std::size_t start = pos_;
        std::string_view name = identifier();
        if (name == "join") {
            expect('(');
            auto left = std::make_shared<const GraphExpr>(expr());
            expect(',');
            auto right = std::make_shared<const GraphExpr>(expr());
            expect(')');
            return {GraphExpr::JoinNode{std::move(left), std::move(right)}};
        }
        if (name == "edgelist") {
            expect('(');
            std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) throw ParseError("unterminated edgelist(", pos_);
            std::string_view path = text_.substr(pos_, close - pos_);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front())))
                path.remove_prefix(1);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
                path.remove_suffix(1);
            if (path.empty()) throw ParseError("empty edge-list path", pos_);
            pos_ = close + 1;
            return {GraphExpr::EdgeListNode{std::string(path)}};
        }
        Family kind;
        if (name == "empty") kind = Family::empty;
        else if (name == "path") kind = Family::path;
        else if (name == "cycle") kind = Family::cycle;
        else if (name == "complete") kind = Family::complete;
        else throw ParseError("unknown graph family '" + std::string(name) + "'", start);
        expect(':');
        return {GraphExpr::FamilyNode{kind, integer()}};
    }
};

}  // namespace

GraphExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

Graph evaluate(const GraphExpr& expr) {
    if (auto* f = expr.as_family()) return family(f->kind, f->n);
    if (auto* j = expr.as_join()) return join(evaluate(*j->left), evaluate(*j->right));
    return read_edge_list(std::get<GraphExpr::EdgeListNode>(expr.node).path);
}

Graph parse_graph_expr(std::string_view text) { return evaluate(parse_expr(text)); }

std::string render(const GraphExpr& expr) {
    if (auto* f = expr.as_family()) return std::string(family_name(f->kind)) + ":" + std::to_string(f->n);
    if (auto* j = expr.as_join()) return "join(" + render(*j->left) + ", " + render(*j->right) + ")";
    return "edgelist(" + std::get<GraphExpr::EdgeListNode>(expr.node).path + ")";
}

std::optional<JoinEmptyShape> match_join_empty(const GraphExpr& expr) {
    auto* j = expr.as_join();
    if (!j) return std::nullopt;
    auto* left = j->left->as_family();
    if (!left || left->kind != Family::empty) return std::nullopt;
    return JoinEmptyShape{left->n, j->right};
}

std::optional<int> match_fan(const GraphExpr& expr) {
    auto shape = match_join_empty(expr);
    if (!shape || shape->m != 1) return std::nullopt;
    auto* right = shape->rest->as_family();
    if (!right || right->kind != Family::path) return std::nullopt;
    return right->n;
}

}  // namespace qec
