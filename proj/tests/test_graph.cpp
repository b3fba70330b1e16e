#include <doctest.h>

#include <stdexcept>

#include "ortho/graph.hpp"

using namespace ortho;

TEST_CASE("construction bounds") {
    CHECK_NOTHROW(Graph(0));
    CHECK_NOTHROW(Graph(64));
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("edges are symmetric and loop-free") {
    Graph g(4);
    g.add_edge(0, 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(0, 4), std::out_of_range);
    g.remove_edge(2, 0);
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.size() == 0);
}

TEST_CASE("degree, neighbors, edges listing") {
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(4) == 0);
    CHECK(g.neighbors(0) == 0b01110u);
    auto es = g.edges();
    REQUIRE(es.size() == 4);
    CHECK(es[0] == std::pair<int, int>{0, 1});
    CHECK(es[3] == std::pair<int, int>{1, 2});
}

TEST_CASE("complement is an involution and partitions pairs") {
    Graph g = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}});
    Graph c = g.complement();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK(g.adjacent(i, j) != c.adjacent(i, j));
    CHECK(c.complement() == g);
    CHECK(g.size() + c.size() == 15);
}

TEST_CASE("induced subgraph relabels in increasing order") {
    // C5 on 0-1-2-3-4; induce on {0,2,3} -> edge only between old 2,3 = new 1,2
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph h = c5.induced(0b01101u);
    CHECK(h.order() == 3);
    CHECK(h.size() == 1);
    CHECK(h.adjacent(1, 2));
    CHECK_FALSE(h.adjacent(0, 1));
}

TEST_CASE("without_vertex and with_edge_removed are non-destructive") {
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph h = k4.without_vertex(0);
    CHECK(h.order() == 3);
    CHECK(h.is_complete());
    CHECK(k4.order() == 4);
    Graph e = k4.with_edge_removed(1, 2);
    CHECK(e.size() == 5);
    CHECK(k4.size() == 6);
}

TEST_CASE("connectivity and completeness") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.is_connected());
    CHECK_FALSE(p3.is_complete());
    Graph two(2);
    CHECK_FALSE(two.is_connected());
    Graph k1(1);
    CHECK(k1.is_connected());
    CHECK(k1.is_complete());
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.is_complete());
}

TEST_CASE("vertex_mask covers exactly the order, including n = 64") {
    CHECK(Graph(3).vertex_mask() == 0b111u);
    CHECK(Graph(64).vertex_mask() == ~uint64_t{0});
}

TEST_CASE("mask_vertices lists set bits in increasing order") {
    auto v = mask_vertices(0b101001u);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 0);
    CHECK(v[1] == 3);
    CHECK(v[2] == 5);
    CHECK(mask_vertices(0).empty());
}

TEST_CASE("rows equality matches operator==") {
    Graph a = Graph::from_edges(4, {{0, 3}});
    Graph b = Graph::from_edges(4, {{0, 3}});
    Graph c = Graph::from_edges(4, {{1, 3}});
    CHECK(a == b);
    CHECK(a.rows() == b.rows());
    CHECK_FALSE(a == c);
    CHECK(a.rows() != c.rows());
    CHECK_FALSE(a == Graph(5));
}
