#include <doctest.h>

#include <algorithm>
#include <set>

#include "ortho/enumerate.hpp"
#include "ortho/families.hpp"
#include "ortho/metrics.hpp"

using namespace ortho;

namespace {

// Brute-force oracles over all vertex subsets (n <= ~16).
int brute_clique(const Graph& g) {
    int best = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.order()); ++mask) {
        auto vs = mask_vertices(mask);
        bool ok = true;
        for (size_t a = 0; a < vs.size() && ok; ++a)
            for (size_t b = a + 1; b < vs.size() && ok; ++b)
                if (!g.adjacent(vs[a], vs[b])) ok = false;
        if (ok) best = std::max<int>(best, vs.size());
    }
    return best;
}

int brute_independence(const Graph& g) { return brute_clique(g.complement()); }

bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    std::set<int> used;
    for (auto [a, b] : m) {
        if (!g.adjacent(a, b)) return false;
        if (!used.insert(a).second || !used.insert(b).second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("clique and independence numbers match brute force on all graphs, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            CHECK(clique_number(g) == brute_clique(g));
            CHECK(independence_number(g) == brute_independence(g));
        }
}

TEST_CASE("maximum_clique returns a clique of the right size, deterministic") {
    for (const Graph& g : all_graphs(5, false)) {
        auto c = maximum_clique(g);
        CHECK(static_cast<int>(c.size()) == clique_number(g));
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = a + 1; b < c.size(); ++b) CHECK(g.adjacent(c[a], c[b]));
        CHECK(maximum_clique(g) == c);
    }
    Graph paley13 = generate(parse_family("paley:13"));
    CHECK(static_cast<int>(maximum_clique(paley13).size()) == 3);
    CHECK(clique_number(paley13) == 3);
    CHECK(independence_number(paley13) == 3);
}

TEST_CASE("girth, diameter, radius on known graphs") {
    Graph c7 = generate(parse_family("cycle:7"));
    Metrics m = metrics(c7);
    CHECK(*m.girth == 7);
    CHECK(*m.diameter == 3);
    CHECK(*m.radius == 3);
    CHECK(m.is_regular);

    Graph petersen = generate(parse_family("petersen"));
    m = metrics(petersen);
    CHECK(*m.girth == 5);
    CHECK(*m.diameter == 2);
    CHECK(m.vertex_connectivity == 3);

    Graph path4 = generate(parse_family("path:4"));
    m = metrics(path4);
    CHECK_FALSE(m.girth.has_value());  // forest
    CHECK(*m.diameter == 3);
    CHECK(m.eccentricities == std::vector<int>{3, 2, 2, 3});

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    m = metrics(disconnected);
    CHECK_FALSE(m.diameter.has_value());
    CHECK(m.vertex_connectivity == 0);
}

TEST_CASE("twins are exactly the duplicated vertex pairs") {
    // C4: 0-1-2-3-0; opposite vertices are twins.
    Graph c4 = generate(parse_family("cycle:4"));
    auto t = twins(c4);
    REQUIRE(t.size() == 2);
    CHECK(std::find(t.begin(), t.end(), std::pair<int, int>{0, 2}) != t.end());
    CHECK(std::find(t.begin(), t.end(), std::pair<int, int>{1, 3}) != t.end());
    CHECK(twins(generate(parse_family("cycle:5"))).empty());
    CHECK(twins(generate(parse_family("petersen"))).empty());
    Graph empty3(3);
    CHECK(twins(empty3).size() == 3);  // all pairs have equal (empty) neighborhoods
}

TEST_CASE("maximum matching sizes, including a blossom case") {
    Graph c5 = generate(parse_family("cycle:5"));
    auto m = maximum_matching(c5);
    CHECK(is_matching(c5, m));
    CHECK(m.size() == 2);

    Graph petersen = generate(parse_family("petersen"));
    m = maximum_matching(petersen);
    CHECK(is_matching(petersen, m));
    CHECK(m.size() == 5);  // perfect

    // Two triangles joined by a bridge: needs blossom handling.
    Graph g = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == 3);

    CHECK(maximum_matching(Graph(4)).empty());
}

TEST_CASE("minimum vertex cut") {
    Graph c6 = generate(parse_family("cycle:6"));
    auto cut = minimum_vertex_cut(c6);
    CHECK(cut.size() == 2);
    uint64_t keep = c6.vertex_mask();
    for (int v : cut) keep &= ~(uint64_t{1} << v);
    CHECK_FALSE(c6.induced(keep).is_connected());

    CHECK(minimum_vertex_cut(generate(parse_family("complete:5"))).empty());
    // Path: the middle vertex is a cut vertex.
    Graph p3 = generate(parse_family("path:3"));
    cut = minimum_vertex_cut(p3);
    REQUIRE(cut.size() == 1);
    CHECK(cut[0] == 1);
    // Already disconnected: empty separator works.
    Graph d(3);
    d.add_edge(0, 1);
    CHECK(minimum_vertex_cut(d).empty());
}

TEST_CASE("structural summary ties the pieces together") {
    Graph c5 = generate(parse_family("cycle:5"));
    Structural s = structural(c5);
    CHECK(s.complement == c5.complement());
    CHECK(s.is_self_complementary);
    REQUIRE(s.is_vertex_transitive.has_value());
    CHECK(*s.is_vertex_transitive);
    CHECK(s.maximum_matching.size() == 2);
    CHECK(s.cut_vertex_set.size() == 2);

    Graph big(20);  // beyond the vertex-transitivity cap
    for (int i = 0; i < 19; ++i) big.add_edge(i, i + 1);
    CHECK_FALSE(structural(big).is_vertex_transitive.has_value());
}
