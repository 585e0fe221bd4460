#include "qec/graph.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <queue>
#include <sstream>

#include "qec/error.hpp"

namespace qec {

Graph::Graph(int n, std::vector<Edge> edges, std::string label)
    : n_(n), edges_(std::move(edges)), label_(std::move(label)) {
    if (n_ < 1) throw InvalidArgument("graph must have at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for n=" + std::to_string(n_));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InvalidArgument("duplicate edge {" + std::to_string(dup->first) + "," +
                              std::to_string(dup->second) + "}");
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<int>> Graph::neighbours() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

IntMatrix Graph::adjacency() const {
    IntMatrix a = IntMatrix::Zero(n_, n_);
    for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1;
    return a;
}

std::optional<int> Graph::regular_degree() const {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
        return std::nullopt;
    return deg.front();
}

bool Graph::is_complete() const noexcept {
    return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool Graph::is_connected() const {
    auto adj = neighbours();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

const char* family_name(Family kind) {
    switch (kind) {
        case Family::empty: return "empty";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
    }
    return "?";
}

Graph family(Family kind, int n) {
    if (n < 1) throw InvalidArgument(std::string(family_name(kind)) + " graph needs n >= 1");
    std::vector<Graph::Edge> edges;
    switch (kind) {
        case Family::empty:
            break;
        case Family::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::cycle:
            if (n < 3) throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case Family::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
    }
    return Graph(n, std::move(edges), std::string(family_name(kind)) + ":" + std::to_string(n));
}

Graph join(const Graph& g1, const Graph& g2) {
    const int m = g1.order();
    const int n = g2.order();
    std::vector<Graph::Edge> edges(g1.edges());
    edges.reserve(g1.size() + g2.size() + static_cast<std::size_t>(m) * n);
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + m, v + m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    std::string label;
    if (!g1.label().empty() && !g2.label().empty())
        label = "join(" + g1.label() + ", " + g2.label() + ")";
    return Graph(m + n, std::move(edges), std::move(label));
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    auto adj = g.neighbours();
    IntMatrix d = IntMatrix::Constant(n, n, -1);
    std::queue<int> queue;
    for (int s = 0; s < n; ++s) {
        d(s, s) = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adj[u])
                if (d(s, w) < 0) {
                    d(s, w) = d(s, u) + 1;
                    queue.push(w);
                }
        }
        for (int t = 0; t < n; ++t)
            if (d(s, t) < 0) throw NotConnected(s, t);
    }
    return {std::move(d)};
}

DistanceMatrix join_distance_matrix(const Graph& g1, const Graph& g2) {
    const IntMatrix a = join(g1, g2).adjacency();
    const auto n = a.rows();
    IntMatrix d = IntMatrix::Constant(n, n, 2) - 2 * IntMatrix::Identity(n, n) - a;
    return {std::move(d)};
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("edge-list file not found: " + path);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& why) {
        return ParseError(path + ":" + std::to_string(line_no) + ": " + why);
    };
    if (!next_line()) throw fail("missing vertex count");
    int n = 0;
    {
        std::istringstream ls(line);
        std::string rest;
        if (!(ls >> n) || (ls >> rest)) throw fail("expected a single vertex count");
    }
    std::vector<Graph::Edge> edges;
    while (next_line()) {
        std::istringstream ls(line);
        int u = 0, v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) throw fail("expected \"i j\"");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges), "edgelist(" + path + ")");
    } catch (const InvalidArgument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace qec
