#include "ortho/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ortho/graph6.hpp"
#include "ortho/iso.hpp"

namespace ortho {

namespace {

struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t x : v) h = (h ^ x) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace

std::vector<Graph> all_graphs(int n, bool connected_only) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("all_graphs supports n <= 7, got " + std::to_string(n));
    const int pairs = n * (n - 1) / 2;
    std::unordered_set<std::vector<uint64_t>, VecHash> seen;
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1u) g.add_edge(i, j);
        if (connected_only && !g.is_connected()) continue;
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace ortho
