#include "ortho/iso.hpp"

#include <algorithm>
#include <bit>

namespace ortho {

namespace {

// Back row of candidate v at position `level`: bit (level-1-k) set iff v is
// adjacent to the vertex placed at position k.
uint64_t back_row(const Graph& g, const std::vector<int>& placed, int level, int v) {
    uint64_t row = 0;
    for (int k = 0; k < level; ++k)
        row = (row << 1) | (g.adjacent(v, placed[k]) ? 1u : 0u);
    return row;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> order;          // candidate vertices, high degree first
    std::vector<uint64_t> best;
    std::vector<uint64_t> cur;
    std::vector<int> placed;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        cur.resize(n);
        placed.reserve(n);
    }

    void dfs(int level, uint64_t used, bool tight) {
        if (level == n) {
            if (!have_best || cur > best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v : order) {
            if ((used >> v) & 1u) continue;
            const uint64_t row = back_row(g, placed, level, v);
            bool next_tight = tight;
            if (tight && have_best) {
                if (row < best[level]) continue;
                next_tight = (row == best[level]);
            } else {
                next_tight = false;
            }
            cur[level] = row;
            placed.push_back(v);
            dfs(level + 1, used | (uint64_t{1} << v), next_tight);
            placed.pop_back();
        }
    }

    std::vector<uint64_t> run() {
        if (n == 0) return {};
        dfs(0, 0, true);
        return best;
    }
};

// Backtracking isomorphism between g and h with an optional pinned pair.
struct IsoSearch {
    const Graph& g;
    const Graph& h;
    int n;
    std::vector<int> map;   // g vertex -> h vertex, -1 unset
    uint64_t used = 0;

    IsoSearch(const Graph& a, const Graph& b) : g(a), h(b), n(a.order()), map(n, -1) {}

    bool extend(int v) {
        if (v == n) return true;
        if (map[v] >= 0) return extend(v + 1);
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1u) continue;
            if (g.degree(v) != h.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (map[u] >= 0 && g.adjacent(v, u) != h.adjacent(w, map[u]))
                    ok = false;
            if (!ok) continue;
            map[v] = w;
            used |= uint64_t{1} << w;
            if (extend(v + 1)) return true;
            map[v] = -1;
            used &= ~(uint64_t{1} << w);
        }
        return false;
    }
};

bool cheap_invariants_differ(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return true;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da != db;
}

}  // namespace

std::vector<uint64_t> canonical_form(const Graph& g) {
    return CanonSearch(g).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (cheap_invariants_differ(a, b)) return false;
    IsoSearch s(a, b);
    return s.extend(0);
}

bool isomorphism_with(const Graph& g, const Graph& h, int u, int v) {
    if (cheap_invariants_differ(g, h)) return false;
    if (g.degree(u) != h.degree(v)) return false;
    IsoSearch s(g, h);
    s.map[u] = v;
    s.used |= uint64_t{1} << v;
    return s.extend(0);
}

bool is_self_complementary(const Graph& g) {
    return isomorphic(g, g.complement());
}

bool is_vertex_transitive(const Graph& g) {
    const int n = g.order();
    if (n > kVertexTransitivityCap)
        throw CapabilityError(
            "vertex-transitivity check supports at most " +
            std::to_string(kVertexTransitivityCap) + " vertices, got " +
            std::to_string(n));
    for (int v = 1; v < n; ++v)
        if (!isomorphism_with(g, g, 0, v)) return false;
    return true;
}

}  // namespace ortho
