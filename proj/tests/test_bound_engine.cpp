#include <doctest.h>

#include <map>

#include <nlohmann/json.hpp>

#include "ortho/bound_engine.hpp"
#include "ortho/enumerate.hpp"
#include "ortho/families.hpp"
#include "ortho/graph6.hpp"
#include "ortho/metrics.hpp"

using namespace ortho;

namespace {

int lb(const std::string& fam, int budget = kDefaultDepthBudget) {
    return lower_bound(generate(parse_family(fam)), budget).bound;
}

}  // namespace

TEST_CASE("known lower bounds") {
    CHECK(lb("complete:2") == 2);
    CHECK(lb("complete:6") == 6);
    CHECK(lb("cycle:4") == 4);
    CHECK(lb("cycle:5") == 3);
    CHECK(lb("cycle:6") == 3);
    CHECK(lb("kn_minus_matching:5") == 5);
    CHECK(lb("kn_minus_matching:7") == 7);
    CHECK(lb("complement-of:cycle:6") == 4);
    CHECK(lb("complement-of:cycle:7") == 5);
    CHECK(lb("complement-of:cycle:8") == 5);  // best this rule family proves
    CHECK(lb("complete_bipartite_minus_edge:3,3") == 5);
    CHECK(lb("paley:13") == 7);
    CHECK(lb("petersen") == 3);
    CHECK(lb("johnson_5_2") == 6);
    CHECK(lower_bound(Graph(1)).bound == 1);
    CHECK(lower_bound(Graph(5)).bound == 2);
}

TEST_CASE("certificates recheck and bounds never exceed n") {
    for (const char* fam : {"cycle:4", "cycle:7", "kn_minus_matching:6",
                            "complement-of:cycle:8", "paley:13", "petersen"}) {
        Graph g = generate(parse_family(fam));
        BoundCertificate c = lower_bound(g);
        CHECK(recheck(c, g) == c.bound);
        CHECK(c.bound <= g.order());
        CHECK(c.bound >= std::min(g.order(), 2));
    }
}

TEST_CASE("bound is monotone in the depth budget and stabilizes") {
    for (const char* fam : {"cycle:4", "kn_minus_matching:7", "complement-of:cycle:7",
                            "johnson_5_2"}) {
        Graph g = generate(parse_family(fam));
        int prev = 0;
        for (int b = 0; b <= kDefaultDepthBudget; ++b) {
            int cur = lower_bound(g, b).bound;
            CHECK(cur >= prev);
            prev = cur;
        }
        CHECK(lower_bound(g, kDefaultDepthBudget + 2).bound == prev);
    }
    // Budget 0 leaves only the leaf rules.
    Graph c4 = generate(parse_family("cycle:4"));
    CHECK(lower_bound(c4, 0).bound == 2);
}

TEST_CASE("engine is deterministic") {
    Graph g = generate(parse_family("complement-of:cycle:7"));
    auto a = certificate_to_json(lower_bound(g));
    auto b = certificate_to_json(lower_bound(g));
    CHECK(a == b);
}

TEST_CASE("infeasible_in_dim agrees with the bound") {
    Graph c4 = generate(parse_family("cycle:4"));
    CHECK(infeasible_in_dim(c4, 3));
    CHECK_FALSE(infeasible_in_dim(c4, 4));
    Graph petersen = generate(parse_family("petersen"));
    CHECK(infeasible_in_dim(petersen, 2));
    CHECK_FALSE(infeasible_in_dim(petersen, 3));
}

TEST_CASE("classify_banned on small graphs with a perfect oracle") {
    // Exact minimum faithful dimensions for the handful of graphs used here.
    std::map<std::vector<uint64_t>, int> table;
    auto remember = [&](const Graph& g, int rank) { table[g.rows()] = rank; };
    Graph p3 = generate(parse_family("path:3"));
    remember(p3, 3);
    remember(p3.with_edge_removed(0, 1), 2);
    remember(p3.with_edge_removed(1, 2), 2);
    Graph c4 = generate(parse_family("cycle:4"));
    remember(c4, 4);
    for (auto [a, b] : c4.edges()) remember(c4.with_edge_removed(a, b), 3);
    Graph k3 = generate(parse_family("complete:3"));
    remember(k3, 3);
    for (auto [a, b] : k3.edges()) remember(k3.with_edge_removed(a, b), 3);
    RankOracle oracle = [&](const Graph& g) -> std::optional<int> {
        auto it = table.find(g.rows());
        if (it == table.end()) return std::nullopt;
        return it->second;
    };

    // P3: rank 3, every edge deletion drops it -> banned for dimension 2,
    // with a duplicated pair after normalization (type I).
    BannedReport r = classify_banned(p3, oracle);
    CHECK(r.status == BannedReport::Status::Conclusive);
    CHECK(r.is_critical);
    CHECK(r.is_banned);
    CHECK(r.banned_for == 2);
    CHECK(r.type == BannedReport::Type::I);

    // C4: banned for dimension 3, twin pairs present.
    r = classify_banned(c4, oracle);
    CHECK(r.status == BannedReport::Status::Conclusive);
    CHECK(r.is_banned);
    CHECK(r.banned_for == 3);
    CHECK(r.type == BannedReport::Type::I);

    // Complete graphs are excluded by definition.
    r = classify_banned(k3, oracle);
    CHECK(r.status == BannedReport::Status::Conclusive);
    CHECK_FALSE(r.is_banned);
    CHECK(r.type == BannedReport::Type::NotBanned);

    // An oracle gap yields an honest Inconclusive, never a guess.
    RankOracle silent = [](const Graph&) { return std::nullopt; };
    r = classify_banned(c4, silent);
    CHECK(r.status == BannedReport::Status::Inconclusive);
}

TEST_CASE("non-critical graphs are not banned") {
    // C5: removing an edge gives P5 which still needs 3 dimensions, so C5
    // is not edge-critical.
    std::map<std::vector<uint64_t>, int> table;
    Graph c5 = generate(parse_family("cycle:5"));
    table[c5.rows()] = 3;
    for (auto [a, b] : c5.edges()) table[c5.with_edge_removed(a, b).rows()] = 3;
    RankOracle oracle = [&](const Graph& g) -> std::optional<int> {
        auto it = table.find(g.rows());
        if (it == table.end()) return std::nullopt;
        return it->second;
    };
    BannedReport r = classify_banned(c5, oracle);
    CHECK(r.status == BannedReport::Status::Conclusive);
    CHECK_FALSE(r.is_critical);
    CHECK_FALSE(r.is_banned);
}

TEST_CASE("bounds are sound against clique number everywhere, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            BoundCertificate c = lower_bound(g);
            CHECK(recheck(c, g) == c.bound);
            CHECK(c.bound >= clique_number(g));
            CHECK(c.bound <= n);
        }
}
