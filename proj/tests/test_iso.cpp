#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "ortho/enumerate.hpp"
#include "ortho/families.hpp"
#include "ortho/iso.hpp"

using namespace ortho;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    return h;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
    Graph petersen = generate(parse_family("petersen"));
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 4, 6};
    CHECK(canonical_form(petersen) == canonical_form(relabel(petersen, perm)));
}

TEST_CASE("canonical form separates isomorphism classes exactly, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto gs = all_graphs(n, false);
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = i; j < gs.size(); ++j) {
                const bool same = canonical_form(gs[i]) == canonical_form(gs[j]);
                CHECK(same == brute_isomorphic(gs[i], gs[j]));
                CHECK(same == isomorphic(gs[i], gs[j]));
            }
    }
}

TEST_CASE("non-isomorphic graph counts, n <= 6") {
    // OEIS A000088: 1, 1, 2, 4, 11, 34, 156.
    CHECK(all_graphs(1, false).size() == 1);
    CHECK(all_graphs(2, false).size() == 2);
    CHECK(all_graphs(3, false).size() == 4);
    CHECK(all_graphs(4, false).size() == 11);
    CHECK(all_graphs(5, false).size() == 34);
    CHECK(all_graphs(6, false).size() == 156);
    // Connected counts, OEIS A001349: 1, 1, 2, 6, 21, 112.
    CHECK(all_graphs(4, true).size() == 6);
    CHECK(all_graphs(5, true).size() == 21);
    CHECK(all_graphs(6, true).size() == 112);
}

TEST_CASE("isomorphism_with pins a vertex image") {
    Graph p3 = generate(parse_family("path:3"));
    // Endpoints can map to endpoints but not to the center.
    CHECK(isomorphism_with(p3, p3, 0, 2));
    CHECK(isomorphism_with(p3, p3, 1, 1));
    CHECK_FALSE(isomorphism_with(p3, p3, 0, 1));
}

TEST_CASE("self-complementarity") {
    CHECK(is_self_complementary(generate(parse_family("cycle:5"))));
    CHECK(is_self_complementary(generate(parse_family("paley:13"))));
    CHECK(is_self_complementary(generate(parse_family("path:4"))));
    CHECK_FALSE(is_self_complementary(generate(parse_family("cycle:6"))));
    CHECK_FALSE(is_self_complementary(generate(parse_family("petersen"))));
    CHECK(is_self_complementary(Graph(1)));
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(generate(parse_family("cycle:8"))));
    CHECK(is_vertex_transitive(generate(parse_family("paley:13"))));
    CHECK(is_vertex_transitive(generate(parse_family("complete:6"))));
    CHECK_FALSE(is_vertex_transitive(generate(parse_family("path:4"))));
    CHECK_FALSE(is_vertex_transitive(
        generate(parse_family("complete_bipartite:2,3"))));
    CHECK_THROWS_AS(is_vertex_transitive(Graph(kVertexTransitivityCap + 1)),
                    CapabilityError);
}
