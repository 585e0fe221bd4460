#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <queue>
#include <random>

#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/graph_expr.hpp"

using namespace qec;

namespace {

// Floyd–Warshall on the edge list; independent of the BFS in the library.
std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

std::vector<Graph> small_families(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back(family(Family::empty, n));
        out.push_back(family(Family::path, n));
        out.push_back(family(Family::complete, n));
        if (n >= 3) out.push_back(family(Family::cycle, n));
    }
    return out;
}

void check_distance_invariants(const DistanceMatrix& d) {
    const int n = d.order();
    for (int i = 0; i < n; ++i) {
        CHECK(d(i, i) == 0);
        for (int j = 0; j < n; ++j) {
            CHECK(d(i, j) == d(j, i));
            if (i != j) CHECK(d(i, j) >= 1);
            for (int k = 0; k < n; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k));
        }
    }
}

}  // namespace

TEST_CASE("families") {
    const Graph p3 = family(Family::path, 3);
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});

    const Graph e2 = family(Family::empty, 2);
    CHECK(e2.order() == 2);
    CHECK(e2.size() == 0);

    const Graph k3 = family(Family::complete, 3);
    CHECK(k3.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {1, 2}});

    const Graph c4 = family(Family::cycle, 4);
    CHECK(c4.size() == 4);
    CHECK(c4.regular_degree() == 2);
    CHECK(p3.label() == "path:3");

    CHECK_THROWS_AS(family(Family::cycle, 2), InvalidArgument);
    CHECK_THROWS_AS(family(Family::path, 0), InvalidArgument);
}

TEST_CASE("path adjacency is tridiagonal") {
    const IntMatrix a = family(Family::path, 6).adjacency();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(a(i, j) == (std::abs(i - j) == 1 ? 1 : 0));
}

TEST_CASE("graph construction rejects malformed edge sets") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
    // Order of insertion and orientation do not matter.
    CHECK(Graph(3, {{2, 1}, {0, 1}}) == family(Family::path, 3));
}

TEST_CASE("join") {
    const Graph fan3 = join(family(Family::empty, 1), family(Family::path, 3));
    CHECK(fan3.order() == 4);
    CHECK(fan3.size() == 5);

    const Graph diamond = join(family(Family::empty, 2), family(Family::complete, 2));
    CHECK(diamond.order() == 4);
    CHECK(diamond.size() == 5);
    CHECK_FALSE(diamond.has_edge(0, 1));  // the two K̄₂ vertices come first

    const Graph w4 = join(family(Family::empty, 1), family(Family::cycle, 4));
    CHECK(w4.order() == 5);
    CHECK(w4.size() == 8);

    // Block structure [A1 J; J A2].
    const Graph g = join(family(Family::path, 2), family(Family::cycle, 3));
    const IntMatrix a = g.adjacency();
    CHECK(a(0, 1) == 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j) CHECK(a(i, j) == 1);
    CHECK(a(2, 3) == 1);
    CHECK(a(2, 4) == 1);
}

TEST_CASE("expression parsing") {
    const Graph f5 = parse_graph_expr("join(empty:1, path:5)");
    CHECK(f5 == join(family(Family::empty, 1), family(Family::path, 5)));
    CHECK(parse_graph_expr("complete:4") == family(Family::complete, 4));
    const Graph nested = parse_graph_expr("join(empty:2, join(empty:1, path:2))");
    CHECK(nested.order() == 5);
    CHECK(nested == join(family(Family::empty, 2), join(family(Family::empty, 1), family(Family::path, 2))));
    CHECK(parse_graph_expr("  join ( empty : 1 ,path:3 ) ") == parse_graph_expr("join(empty:1, path:3)"));

    auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::string::npos;
    };
    CHECK(offset_of("join(path:2 path:3)") == 12);
    CHECK(offset_of("path:") == 5);
    CHECK(offset_of("path:3 extra") == 7);
    CHECK_THROWS_AS(parse_expr("star:5"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("edgelist(/nonexistent/graph.txt)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("cycle:2"), InvalidArgument);
}

TEST_CASE("render round-trips") {
    for (const char* text : {"path:3", "join(empty:2, complete:4)", "join(join(path:1, cycle:5), empty:3)"}) {
        const GraphExpr e = parse_expr(text);
        CHECK(render(e) == text);
        CHECK(parse_graph_expr(render(e)) == evaluate(e));
    }
    std::mt19937_64 rng(7);
    const char* kinds[] = {"empty", "path", "complete", "cycle"};
    for (int t = 0; t < 50; ++t) {
        auto leaf = [&] {
            const int k = std::uniform_int_distribution<int>(0, 3)(rng);
            const int n = std::uniform_int_distribution<int>(k == 3 ? 3 : 1, 6)(rng);
            return std::string(kinds[k]) + ":" + std::to_string(n);
        };
        const std::string text = "join(" + leaf() + ", join(" + leaf() + ", " + leaf() + "))";
        CHECK(parse_graph_expr(render(parse_expr(text))) == parse_graph_expr(text));
    }
}

TEST_CASE("solver shape matching") {
    auto shape = match_join_empty(parse_expr("join(empty:3, cycle:5)"));
    REQUIRE(shape);
    CHECK(shape->m == 3);
    CHECK(render(*shape->rest) == "cycle:5");
    CHECK_FALSE(match_join_empty(parse_expr("join(cycle:5, empty:3)")));
    CHECK(match_fan(parse_expr("join(empty:1, path:7)")) == 7);
    CHECK_FALSE(match_fan(parse_expr("join(empty:2, path:7)")));
}

TEST_CASE("edge-list files") {
    const std::string path = "test_graph_edges.txt";
    {
        std::ofstream f(path);
        f << "4\n0 1\n\n1 2\n2 3\n3 0\n";
    }
    const Graph g = read_edge_list(path);
    CHECK(g == family(Family::cycle, 4));
    CHECK(parse_graph_expr("edgelist(" + path + ")") == g);
    CHECK(write_edge_list(g) == "4\n0 1\n0 3\n1 2\n2 3\n");
    {
        std::ofstream f(path);
        f << "3\n0 1 2\n";
    }
    CHECK_THROWS_AS(read_edge_list(path), ParseError);
    {
        std::ofstream f(path);
        f << "3\n0 0\n";
    }
    CHECK_THROWS_AS(read_edge_list(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_edge_list(path), ParseError);
}

TEST_CASE("distance matrices") {
    const DistanceMatrix p3 = distance_matrix(family(Family::path, 3));
    CHECK(p3(0, 2) == 2);
    CHECK(p3(0, 1) == 1);
    CHECK(p3(1, 2) == 1);

    const DistanceMatrix fan = distance_matrix(join(family(Family::empty, 1), family(Family::path, 3)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK((fan(i, j) == 1 || fan(i, j) == 2));
    CHECK(fan(1, 3) == 2);

    const DistanceMatrix k5 = distance_matrix(family(Family::complete, 5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(k5(i, j) == (i == j ? 0 : 1));

    try {
        distance_matrix(Graph(4, {{0, 1}, {2, 3}}));
        FAIL("expected NotConnected");
    } catch (const NotConnected& e) {
        CHECK(((e.u() < 2) != (e.v() < 2)));
    }
}

TEST_CASE("join distance matrix examples") {
    const DistanceMatrix k2 = join_distance_matrix(family(Family::empty, 1), family(Family::path, 1));
    CHECK(k2.d == (IntMatrix(2, 2) << 0, 1, 1, 0).finished());

    const DistanceMatrix diamond = join_distance_matrix(family(Family::empty, 2), family(Family::complete, 2));
    int at_two = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) at_two += diamond(i, j) == 2;
    CHECK(at_two == 1);
    CHECK(diamond(0, 1) == 2);

    const DistanceMatrix w4 = join_distance_matrix(family(Family::empty, 1), family(Family::cycle, 4));
    CHECK(w4(1, 3) == 2);
    CHECK(w4(2, 4) == 2);
    CHECK(w4(1, 2) == 1);
    CHECK(w4 == distance_matrix(join(family(Family::empty, 1), family(Family::cycle, 4))));
}

TEST_CASE("join distance formula matches BFS and Floyd-Warshall") {
    const auto fams = small_families(5);
    for (const Graph& a : fams)
        for (const Graph& b : fams) {
            const Graph j = join(a, b);
            const DistanceMatrix d = distance_matrix(j);
            CHECK(join_distance_matrix(a, b) == d);
            const auto f = floyd(j);
            for (int u = 0; u < j.order(); ++u)
                for (int v = 0; v < j.order(); ++v) CHECK(d(u, v) == f[u][v]);
        }

    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const int n1 = std::uniform_int_distribution<int>(1, 9)(rng);
        const int n2 = std::uniform_int_distribution<int>(1, 10 - n1)(rng);
        const Graph a = random_graph(rng, n1, 0.4), b = random_graph(rng, n2, 0.4);
        CHECK(join_distance_matrix(a, b) == distance_matrix(join(a, b)));
    }
}

TEST_CASE("distance matrix invariants on connected graphs") {
    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 100) {
        const Graph g = random_graph(rng, std::uniform_int_distribution<int>(2, 9)(rng), 0.35);
        if (!g.is_connected()) {
            CHECK_THROWS_AS(distance_matrix(g), NotConnected);
            continue;
        }
        const DistanceMatrix d = distance_matrix(g);
        check_distance_invariants(d);
        const auto f = floyd(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) CHECK(d(u, v) == f[u][v]);
        ++tested;
    }
}
