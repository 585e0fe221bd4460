#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qec {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored as sorted pairs (i, j) with i < j; the edge list itself
/// is kept sorted so two graphs with the same vertex count and edge set
/// compare equal regardless of how they were built. The label is carried
/// along for display and does not take part in equality.
class Graph {
public:
    using Edge = std::pair<int, int>;

    /// Throws InvalidArgument on n < 1, self-loops, out-of-range endpoints or
    /// duplicate edges.
    Graph(int n, std::vector<Edge> edges, std::string label = {});

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& label() const noexcept { return label_; }

    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> neighbours() const;
    IntMatrix adjacency() const;

    /// Returns the common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const;
    bool is_complete() const noexcept;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::string label_;
};

enum class Family { empty, path, cycle, complete };

/// Standard graph of a family. Path vertices are consecutively adjacent and a
/// cycle closes the path with {0, n-1}.
Graph family(Family kind, int n);

const char* family_name(Family kind);

/// Join: g1 keeps its indices, g2 is shifted by g1.order(), and every
/// cross pair is an edge.
Graph join(const Graph& g1, const Graph& g2);

/// Graph distances; entries are integers.
struct DistanceMatrix {
    IntMatrix d;

    int order() const noexcept { return static_cast<int>(d.rows()); }
    std::int64_t operator()(int i, int j) const { return d(i, j); }
    Eigen::MatrixXd as_real() const { return d.cast<double>(); }

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
        return a.d.rows() == b.d.rows() && a.d.cols() == b.d.cols() && a.d == b.d;
    }
};

/// All-pairs BFS distances. Throws NotConnected naming an unreachable pair.
DistanceMatrix distance_matrix(const Graph& g);

/// Distance matrix of join(g1, g2) from the block identity D = 2J - 2I - A.
DistanceMatrix join_distance_matrix(const Graph& g1, const Graph& g2);

/// Edge-list text: first line n, then one "i j" pair per line (0-based).
Graph read_edge_list(const std::string& path);
std::string write_edge_list(const Graph& g);

}  // namespace qec
