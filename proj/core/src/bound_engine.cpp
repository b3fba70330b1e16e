#include "ortho/bound_engine.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "ortho/iso.hpp"
#include "ortho/metrics.hpp"

namespace ortho {

namespace {

// Sizes above which the expensive rules are skipped: self-complementarity
// needs an isomorphism search, vertex deletion walks the subset lattice.
constexpr int kSelfComplementaryCap = 16;
constexpr int kMonotoneCap = 14;
constexpr size_t kMaxShapesPerSite = 4096;

struct MaskKey {
    uint64_t mask;
    int budget;
    bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
    size_t operator()(const MaskKey& k) const {
        return std::hash<uint64_t>()(k.mask * 0x9e3779b97f4a7c15ull ^
                                     static_cast<uint64_t>(k.budget));
    }
};

class Engine {
public:
    explicit Engine(const Graph& g) : g_(g) {}

    const BoundCertificate& compute(uint64_t mask, int budget) {
        const MaskKey key{mask, budget};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BoundCertificate best = base_cert(mask, budget);
        consider_clique(mask, budget, best);
        consider_self_complementary(mask, budget, best);
        if (budget > 0) {
            consider_parallel_and_hidden(mask, budget, best);
            consider_monotone(mask, budget, best);
        }
        return memo_.emplace(key, std::move(best)).first->second;
    }

private:
    BoundCertificate base_cert(uint64_t mask, int budget) const {
        BoundCertificate c;
        c.rule = Rule::Base;
        c.vertices = mask_vertices(mask);
        c.bound = std::min<int>(std::popcount(mask), 2);
        c.depth_budget = budget;
        return c;
    }

    void consider_clique(uint64_t mask, int budget, BoundCertificate& best) {
        const auto verts = mask_vertices(mask);
        if (verts.size() < 3) return;  // Base already covers bounds up to 2
        const Graph sub = g_.induced(mask);
        std::vector<int> clique = maximum_clique(sub);
        if (static_cast<int>(clique.size()) <= best.bound) return;
        for (int& v : clique) v = verts[v];  // back to root labels
        BoundCertificate c;
        c.rule = Rule::Clique;
        c.vertices = verts;
        c.bound = static_cast<int>(clique.size());
        c.clique = std::move(clique);
        c.depth_budget = budget;
        best = std::move(c);
    }

    void consider_self_complementary(uint64_t mask, int budget, BoundCertificate& best) {
        const int k = std::popcount(mask);
        if (k > kSelfComplementaryCap) return;
        const int bound = (k + 1) / 2;
        if (bound <= best.bound) return;
        const Graph sub = g_.induced(mask);
        if (2 * sub.size() != k * (k - 1) / 2) return;  // |E| must be half of all pairs
        if (!is_self_complementary(sub)) return;
        BoundCertificate c;
        c.rule = Rule::SelfComplementary;
        c.vertices = mask_vertices(mask);
        c.bound = bound;
        c.depth_budget = budget;
        best = std::move(c);
    }

    // Admissible span shapes inside `mask`: cliques of any size plus
    // non-adjacent pairs, as masks, in deterministic order.
    std::vector<uint64_t> shapes_in(uint64_t mask) const {
        std::vector<uint64_t> out;
        const auto verts = mask_vertices(mask);
        // Cliques, grown over vertices in increasing order.
        const auto grow = [&](auto&& self, uint64_t chosen, uint64_t cand) -> void {
            if (chosen && out.size() < kMaxShapesPerSite) out.push_back(chosen);
            if (out.size() >= kMaxShapesPerSite) return;
            for (int v : mask_vertices(cand)) {
                self(self, chosen | (uint64_t{1} << v),
                     cand & g_.neighbors(v) & ~((uint64_t{2} << v) - 1));
            }
        };
        grow(grow, 0, mask);
        for (size_t a = 0; a < verts.size() && out.size() < kMaxShapesPerSite; ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (!g_.adjacent(verts[a], verts[b]))
                    out.push_back((uint64_t{1} << verts[a]) | (uint64_t{1} << verts[b]));
        return out;
    }

    void consider_parallel_and_hidden(uint64_t mask, int budget, BoundCertificate& best) {
        const auto verts = mask_vertices(mask);
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b) {
                const int u = verts[a], v = verts[b];
                if (g_.adjacent(u, v)) continue;

                const uint64_t common = g_.neighbors(u) & g_.neighbors(v) & mask;
                const BoundCertificate& child = compute(common, budget - 1);
                if (child.bound + 2 > best.bound) {
                    BoundCertificate c;
                    c.rule = Rule::Parallel;
                    c.vertices = verts;
                    c.u = u;
                    c.v = v;
                    c.common = mask_vertices(common);
                    c.bound = child.bound + 2;
                    c.depth_budget = budget;
                    c.children = {child};
                    best = std::move(c);
                }

                const uint64_t ub = uint64_t{1} << u, vb = uint64_t{1} << v;
                const uint64_t base1 = g_.neighbors(v) & mask & ~ub;
                const uint64_t base2 = g_.neighbors(u) & mask & ~vb;
                for (uint64_t s1 : shapes_in(base1)) {
                    uint64_t allowed = base2 & ~s1;
                    for (int x : mask_vertices(s1)) allowed &= g_.neighbors(x);
                    if (!allowed) continue;
                    const BoundCertificate& c1 = compute(s1, budget - 1);
                    for (uint64_t s2 : shapes_in(allowed)) {
                        const BoundCertificate& c2 = compute(s2, budget - 1);
                        if (c1.bound + c2.bound + 1 <= best.bound) continue;
                        BoundCertificate c;
                        c.rule = Rule::HiddenEdge;
                        c.vertices = verts;
                        c.u = u;
                        c.v = v;
                        c.s1 = mask_vertices(s1);
                        c.s2 = mask_vertices(s2);
                        c.bound = c1.bound + c2.bound + 1;
                        c.depth_budget = budget;
                        c.children = {c1, c2};
                        best = std::move(c);
                    }
                }
            }
    }

    void consider_monotone(uint64_t mask, int budget, BoundCertificate& best) {
        if (std::popcount(mask) > kMonotoneCap) return;
        for (int v : mask_vertices(mask)) {
            const BoundCertificate& child = compute(mask & ~(uint64_t{1} << v), budget - 1);
            if (child.bound <= best.bound) continue;
            BoundCertificate c;
            c.rule = Rule::Monotone;
            c.vertices = mask_vertices(mask);
            c.deleted_vertex = v;
            c.bound = child.bound;
            c.depth_budget = budget;
            c.children = {child};
            best = std::move(c);
        }
    }

    const Graph& g_;
    std::unordered_map<MaskKey, BoundCertificate, MaskKeyHash> memo_;
};

bool contains_rule(const BoundCertificate& c, Rule r) {
    if (c.rule == r) return true;
    for (const auto& child : c.children)
        if (contains_rule(child, r)) return true;
    return false;
}

}  // namespace

BoundCertificate lower_bound(const Graph& g, int depth_budget) {
    if (depth_budget < 0) throw std::invalid_argument("depth budget must be >= 0");
    Engine e(g);
    return e.compute(g.vertex_mask(), depth_budget);
}

bool infeasible_in_dim(const Graph& g, int d, int depth_budget) {
    return lower_bound(g, depth_budget).bound > d;
}

BannedReport classify_banned(const Graph& g, const RankOracle& rank, int depth_budget) {
    BannedReport rpt;
    const std::optional<int> r = rank(g);
    if (!r) {
        rpt.note = "rank oracle could not resolve the graph";
        return rpt;
    }
    if (g.size() == 0) {
        rpt.status = BannedReport::Status::Conclusive;
        rpt.note = "no edges, criticality does not apply";
        return rpt;
    }

    bool critical = true;
    for (auto [i, j] : g.edges()) {
        const std::optional<int> re = rank(g.with_edge_removed(i, j));
        if (!re) {
            rpt.note = "rank oracle could not resolve g minus edge (" + std::to_string(i) +
                       ", " + std::to_string(j) + ")";
            return rpt;
        }
        if (*re == *r) {
            critical = false;
            break;
        }
    }

    rpt.status = BannedReport::Status::Conclusive;
    rpt.is_critical = critical;
    if (!critical) {
        rpt.note = "some edge deletion leaves the rank unchanged";
        return rpt;
    }
    if (g.is_complete()) {
        rpt.note = "critical but complete; complete graphs are excluded";
        return rpt;
    }

    rpt.is_banned = true;
    rpt.banned_for = *r - 1;
    const BoundCertificate cert = lower_bound(g, depth_budget);
    const bool type1 = !twins(g).empty();
    const bool type2 = contains_rule(cert, Rule::HiddenEdge);
    rpt.type = type1 && type2 ? BannedReport::Type::Both
               : type1       ? BannedReport::Type::I
               : type2       ? BannedReport::Type::II
                             : BannedReport::Type::Unclassified;
    rpt.witness = cert;
    return rpt;
}

}  // namespace ortho
