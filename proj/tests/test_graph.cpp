#include <doctest.h>

#include <algorithm>
#include <random>

#include "overlapnet/graph.hpp"

using namespace overlapnet;

TEST_CASE("load_edge_list basic") {
    Graph g = load_edge_list("0 1\n1 2", false);
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("load_edge_list one-based shift") {
    Graph g = load_edge_list("1 2\n2 3", true);
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("load_edge_list comments, duplicates, self-loops") {
    LoadReport report;
    Graph g = load_edge_list("# header\n0 1\n1 0\n2 2\n0 1\n1 2 # trailing", false, &report);
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(report.dropped_duplicates == 2);
    CHECK(report.dropped_self_loops == 1);
}

TEST_CASE("load_edge_list errors") {
    CHECK_THROWS(load_edge_list("", false));
    CHECK_THROWS(load_edge_list("0 x", false));
    CHECK_THROWS(load_edge_list("0", false));
}

TEST_CASE("load_edge_list idempotent under re-listing") {
    Graph once = load_edge_list("0 1\n1 2\n2 3", false);
    Graph twice = load_edge_list("0 1\n1 2\n2 3\n0 1\n1 2\n2 3", false);
    CHECK(once.edges == twice.edges);
    CHECK(once.n == twice.n);
}

TEST_CASE("load_lfr_files") {
    auto [g, cover] = load_lfr_files("1 2\n2 1", "1\t1\n2\t1");
    CHECK(g.n == 2);
    CHECK(g.edge_count() == 1);
    REQUIRE(cover.community_count() == 1);
    CHECK(cover.communities[0] == std::vector<int>{0, 1});
}

TEST_CASE("load_lfr_files overlap line") {
    auto [g, cover] = load_lfr_files("1 2\n3 4\n5 1\n5 2\n5 3\n5 4", "1\t1\n2\t1\n3\t2\n4\t2\n5\t1 2");
    CHECK(g.n == 5);
    REQUIRE(cover.community_count() == 2);
    // node 5 (0-based 4) carries both labels
    CHECK(std::count(cover.communities[0].begin(), cover.communities[0].end(), 4) == 1);
    CHECK(std::count(cover.communities[1].begin(), cover.communities[1].end(), 4) == 1);
}

TEST_CASE("load_lfr_files errors") {
    CHECK_THROWS(load_lfr_files("1 2", "1\t1\n2\t1\n3\t1")); // node 3 absent from network
    CHECK_THROWS(load_lfr_files("1 2\n2 3", "1\t1\n2\t1"));  // node 3 uncovered
}

TEST_CASE("adjacency_unit_diag") {
    Graph g;
    g.n = 2;
    g.edges = {{0, 1}};
    Matrix A = adjacency_unit_diag(g);
    CHECK(A(0, 0) == 1.0);
    CHECK(A(0, 1) == 1.0);
    CHECK(A(1, 0) == 1.0);
    CHECK(A(1, 1) == 1.0);

    Graph isolated;
    isolated.n = 2;
    Matrix I = adjacency_unit_diag(isolated);
    CHECK(I(0, 0) == 1.0);
    CHECK(I(0, 1) == 0.0);
    CHECK(I(1, 1) == 1.0);

    Graph three;
    three.n = 3;
    three.edges = {{0, 1}};
    Matrix B = adjacency_unit_diag(three);
    CHECK(B(2, 2) == 1.0);
    CHECK(B(0, 2) == 0.0);
    CHECK(B(1, 2) == 0.0);
}

TEST_CASE("adjacency row sums equal degree + 1") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::pair<int, int>> edges;
        const int n = 20;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) edges.emplace_back(i, j);
        Graph g = graph_from_edges(std::move(edges), n);
        Matrix A = adjacency_unit_diag(g);
        auto deg = g.degrees();
        for (std::size_t i = 0; i < g.n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < g.n; ++j) row += A(i, j);
            CHECK(row == doctest::Approx(deg[i] + 1.0));
        }
    }
}

TEST_CASE("induced_edge_count") {
    Graph tri;
    tri.n = 3;
    tri.edges = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(induced_edge_count(tri, {0, 1, 2}) == 3);
    CHECK(induced_edge_count(tri, {0, 1}) == 1);
    CHECK(induced_edge_count(tri, {}) == 0);
    CHECK_THROWS(induced_edge_count(tri, {5}));
}

TEST_CASE("induced edge count bounded by clique size") {
    std::mt19937_64 rng(5);
    const int n = 15;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) edges.emplace_back(i, j);
    Graph g = graph_from_edges(std::move(edges), n);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) subset.push_back(v);
        const std::size_t s = subset.size();
        CHECK(induced_edge_count(g, subset) <= s * (s > 0 ? s - 1 : 0) / 2);
    }
}
