#include "ortho/catalog.hpp"

namespace ortho {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "CONFIRMED";
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Refuted: return "REFUTED";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    throw std::logic_error("unreachable verdict");
}

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    const auto add = [&](std::string name, FamilySpec spec, Claim claim, std::string note) {
        out.push_back({std::move(name), std::move(spec), claim, std::move(note)});
    };
    for (int n = 2; n <= 7; ++n)
        add("complete_" + std::to_string(n), FamilySpec::make(FamilyKind::Complete, {n}),
            Claim::exact(n), "clique needs one dimension per vertex");
    add("cycle_4", FamilySpec::make(FamilyKind::Cycle, {4}), Claim::exact(4),
        "the smallest type-I banned graph");
    for (int n = 5; n <= 9; ++n)
        add("cycle_" + std::to_string(n), FamilySpec::make(FamilyKind::Cycle, {n}),
            Claim::exact(3), "longer cycles flatten into three dimensions");
    for (int n = 4; n <= 7; ++n)
        add("kn_minus_matching_" + std::to_string(n),
            FamilySpec::make(FamilyKind::KnMinusMatching, {n}), Claim::exact(n),
            "duplicated vertices pin the dimension at n");
    for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}})
        add("complete_bipartite_" + std::to_string(a) + "_" + std::to_string(b),
            FamilySpec::make(FamilyKind::CompleteBipartite, {a, b}), Claim::exact(4),
            "two independent sides in doubled planes");
    add("complete_bipartite_3_3_minus_edge",
        FamilySpec::make(FamilyKind::CompleteBipartiteMinusEdge, {3, 3}), Claim::exact(5),
        "removing one cross edge costs a dimension");
    for (int n = 6; n <= 8; ++n)
        add("complement_cycle_" + std::to_string(n),
            FamilySpec::complement_of(FamilySpec::make(FamilyKind::Cycle, {n})),
            Claim::exact(n - 2), "cycle complements sit two below their order");
    add("paley_5", FamilySpec::make(FamilyKind::Paley, {5}), Claim::exact(3),
        "self-complementary, vertex-transitive, order 5");
    add("paley_13", FamilySpec::make(FamilyKind::Paley, {13}), Claim::exact(7),
        "self-complementary, vertex-transitive, order 13");
    add("petersen", FamilySpec::make(FamilyKind::Petersen), Claim::exact(3),
        "admits a dimension-3 faithful representation");
    add("johnson_5_2", FamilySpec::make(FamilyKind::Johnson52), Claim::interval(5, 7),
        "only a bracket is known");
    return out;
}

const RankResult& RankCache::rank(const Graph& g, ReprClass cls) {
    const auto key = std::make_pair(g.rows(), cls);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    return memo_.emplace(key, orthogonal_rank(g, cls, opts_)).first->second;
}

std::optional<int> RankCache::exact(const Graph& g) {
    const RankResult& r = rank(g);
    if (r.status == RankStatus::Exact) return r.ub;
    return std::nullopt;
}

RankOracle RankCache::oracle() {
    return [this](const Graph& g) { return exact(g); };
}

Verdict judge(const Claim& claim, const RankResult& rank) {
    const bool closed = rank.status == RankStatus::Exact;
    const bool excluded = rank.lb > claim.hi || rank.ub < claim.lo;
    switch (claim.kind) {
        case Claim::Kind::Exact:
        case Claim::Kind::Conjectured:
            if (closed && rank.ub == claim.lo) return Verdict::Confirmed;
            if (excluded) return Verdict::Refuted;
            return Verdict::Inconclusive;
        case Claim::Kind::Interval:
            if (claim.lo <= rank.lb && rank.ub <= claim.hi) return Verdict::Consistent;
            if (excluded) return Verdict::Refuted;
            return Verdict::Inconclusive;
    }
    throw std::logic_error("unreachable claim kind");
}

std::vector<CatalogResult> catalog_run(int max_n, RankCache& cache) {
    std::vector<CatalogResult> out;
    for (const CatalogEntry& entry : default_catalog()) {
        const Graph g = generate(entry.spec);
        if (g.order() > max_n) continue;
        const RankResult& rank = cache.rank(g);
        out.push_back({entry, rank, judge(entry.claim, rank)});
    }
    return out;
}

}  // namespace ortho
