#ifndef ORTHO_GRAPH_HPP
#define ORTHO_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ortho {

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// 64-bit row per vertex.  Rows are kept symmetric with an empty diagonal.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: order must be in [0, 64], got " +
                                        std::to_string(n));
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    int order() const { return n_; }

    int size() const {
        int e = 0;
        for (int v = 0; v < n_; ++v) e += std::popcount(adj_[v]);
        return e / 2;
    }

    bool adjacent(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (adj_[i] >> j) & 1u;
    }

    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("Graph: self-loops not supported");
        adj_[i] |= uint64_t{1} << j;
        adj_[j] |= uint64_t{1} << i;
    }

    void remove_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        adj_[i] &= ~(uint64_t{1} << j);
        adj_[j] &= ~(uint64_t{1} << i);
    }

    /// Neighbor set of v as a bitmask.
    uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    uint64_t vertex_mask() const {
        return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    }

    Graph complement() const {
        Graph g(n_);
        const uint64_t all = vertex_mask();
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = (~adj_[v] & all) & ~(uint64_t{1} << v);
        return g;
    }

    /// Induced subgraph on the vertices of `mask`, relabeled 0..k-1 in
    /// increasing order of original label.
    Graph induced(uint64_t mask) const;

    Graph without_vertex(int v) const {
        check_vertex(v);
        return induced(vertex_mask() & ~(uint64_t{1} << v));
    }

    Graph with_edge_removed(int i, int j) const {
        Graph g = *this;
        g.remove_edge(i, j);
        return g;
    }

    bool is_complete() const { return size() == n_ * (n_ - 1) / 2; }

    bool is_connected() const;

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((adj_[i] >> j) & 1u) out.emplace_back(i, j);
        return out;
    }

    /// Raw adjacency rows; usable as a hash/equality key.
    std::vector<uint64_t> rows() const {
        return std::vector<uint64_t>(adj_.begin(), adj_.begin() + n_);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::array<uint64_t, kMaxVertices> adj_{};
};

/// Vertices of a mask in increasing order.
std::vector<int> mask_vertices(uint64_t mask);

}  // namespace ortho

#endif
