#include "ortho/metrics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "ortho/iso.hpp"

namespace ortho {

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    uint64_t best_mask = 0;

    void expand(uint64_t chosen, int size, uint64_t cand) {
        if (size + std::popcount(cand) <= best) return;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            const uint64_t bit = uint64_t{1} << v;
            const uint64_t next = cand & g.neighbors(v);
            if (size + 1 > best) {
                best = size + 1;
                best_mask = chosen | bit;
            }
            if (next) expand(chosen | bit, size + 1, next);
        }
    }
};

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (uint64_t m = g.neighbors(v); m;) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::optional<int> girth_of(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    for (int src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (uint64_t m = g.neighbors(v); m;) {
                const int w = std::countr_zero(m);
                m &= m - 1;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w && parent[w] != v) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// Unit-vertex-capacity max flow on the split graph (v_in, v_out).
struct VertexFlow {
    int n;
    std::vector<std::vector<int>> cap;  // 2n x 2n residual capacities

    explicit VertexFlow(const Graph& g) : n(g.order()), cap(2 * n, std::vector<int>(2 * n, 0)) {
        for (int v = 0; v < n; ++v) {
            cap[in(v)][out(v)] = 1;
            for (uint64_t m = g.neighbors(v); m;) {
                const int w = std::countr_zero(m);
                m &= m - 1;
                cap[out(v)][in(w)] = n;  // effectively infinite
            }
        }
    }

    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }

    int max_flow(int s, int t) {
        // s and t are uncapacitated endpoints.
        cap[in(s)][out(s)] = n;
        cap[in(t)][out(t)] = n;
        int flow = 0;
        while (augment(out(s), in(t))) ++flow;
        return flow;
    }

    bool augment(int s, int t) {
        std::vector<int> prev(2 * n, -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] < 0) {
            const int v = q.front();
            q.pop();
            for (int w = 0; w < 2 * n; ++w)
                if (prev[w] < 0 && cap[v][w] > 0) {
                    prev[w] = v;
                    q.push(w);
                }
        }
        if (prev[t] < 0) return false;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        return true;
    }

    std::vector<int> cut_vertices(int s) {
        // Vertices whose in->out edge is saturated and crosses the cut.
        std::vector<bool> reach(2 * n, false);
        std::queue<int> q;
        q.push(out(s));
        reach[out(s)] = true;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w = 0; w < 2 * n; ++w)
                if (!reach[w] && cap[v][w] > 0) {
                    reach[w] = true;
                    q.push(w);
                }
        }
        std::vector<int> cut;
        for (int v = 0; v < n; ++v)
            if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        return cut;
    }
};

// Blossom algorithm internals for maximum matching.
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> used, in_blossom;

    explicit Blossom(const Graph& graph)
        : g(graph), n(graph.order()), match(n, -1), parent(n, -1), base(n) {}

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] < 0) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to = 0; to < n; ++to) {
                if (!g.adjacent(v, to)) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    const int b = lca(v, to);
                    in_blossom.assign(n, false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        used.assign(n, false);
        // Greedy seed by lowest-index edge.
        for (int v = 0; v < n; ++v)
            if (match[v] < 0)
                for (int w = v + 1; w < n; ++w)
                    if (g.adjacent(v, w) && match[w] < 0) {
                        match[v] = w;
                        match[w] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v) {
            if (match[v] >= 0) continue;
            int end = find_augmenting_path(v);
            while (end >= 0) {
                const int pv = parent[end];
                const int ppv = match[pv];
                match[end] = pv;
                match[pv] = end;
                end = ppv;
            }
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    CliqueSearch s{g};
    s.expand(0, 0, g.vertex_mask());
    return s.best;
}

std::vector<int> maximum_clique(const Graph& g) {
    if (g.order() == 0) return {};
    CliqueSearch s{g};
    s.expand(0, 0, g.vertex_mask());
    return mask_vertices(s.best_mask);
}

int independence_number(const Graph& g) {
    return clique_number(g.complement());
}

Metrics metrics(const Graph& g) {
    Metrics m;
    const int n = g.order();
    m.girth = girth_of(g);
    m.eccentricities.assign(n, -1);
    if (n > 0) {
        m.min_degree = n;
        for (int v = 0; v < n; ++v) {
            m.min_degree = std::min(m.min_degree, g.degree(v));
            m.max_degree = std::max(m.max_degree, g.degree(v));
        }
        m.is_regular = (m.min_degree == m.max_degree);
        if (g.is_connected()) {
            int diam = 0, rad = n;
            for (int v = 0; v < n; ++v) {
                const auto dist = bfs_dist(g, v);
                const int ecc = *std::max_element(dist.begin(), dist.end());
                m.eccentricities[v] = ecc;
                diam = std::max(diam, ecc);
                rad = std::min(rad, ecc);
            }
            m.diameter = diam;
            m.radius = rad;
        }
    }
    if (n <= 1) {
        m.vertex_connectivity = 0;
    } else if (g.is_complete()) {
        m.vertex_connectivity = n - 1;
    } else {
        int best = n;
        for (int s = 0; s < n && best > 0; ++s)
            for (int t = s + 1; t < n && best > 0; ++t) {
                if (g.adjacent(s, t)) continue;
                VertexFlow f(g);
                best = std::min(best, f.max_flow(s, t));
            }
        m.vertex_connectivity = best;
    }
    return m;
}

std::vector<std::pair<int, int>> twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v))
                out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    Blossom b(g);
    b.run();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.order(); ++v)
        if (b.match[v] > v) out.emplace_back(v, b.match[v]);
    return out;
}

std::vector<int> minimum_vertex_cut(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.is_complete()) return {};
    int best = n;
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            VertexFlow f(g);
            const int flow = f.max_flow(s, t);
            if (flow < best) {
                best = flow;
                best_pair = {s, t};
            }
        }
    VertexFlow f(g);
    f.max_flow(best_pair.first, best_pair.second);
    return f.cut_vertices(best_pair.first);
}

Structural structural(const Graph& g) {
    Structural s{g.complement()};
    s.is_self_complementary = is_self_complementary(g);
    if (g.order() <= kVertexTransitivityCap)
        s.is_vertex_transitive = is_vertex_transitive(g);
    s.maximum_matching = maximum_matching(g);
    s.cut_vertex_set = minimum_vertex_cut(g);
    return s;
}

}  // namespace ortho
