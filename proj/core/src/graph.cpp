#include "ortho/graph.hpp"

#include <bit>

namespace ortho {

std::vector<int> mask_vertices(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

Graph Graph::induced(uint64_t mask) const {
    mask &= vertex_mask();
    const std::vector<int> verts = mask_vertices(mask);
    Graph g(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if ((adj_[verts[a]] >> verts[b]) & 1u)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    uint64_t seen = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

}  // namespace ortho
