#include "ortho/graph6.hpp"

namespace ortho {

namespace {
constexpr int kLo = 63;    // printable offset
constexpr int kHi = 126;
}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 string", 0);

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw Graph6ParseError("truncated graph6 string", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kLo || c > kHi)
            throw Graph6ParseError("byte outside printable graph6 range", pos);
        ++pos;
        return c - kLo;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // 126 prefix: three 6-bit groups follow.
        const size_t header = pos - 1;
        long v = 0;
        for (int k = 0; k < 3; ++k) v = (v << 6) | next();
        n = v;
        if (n <= 62)
            throw Graph6ParseError("non-canonical long-form header", header);
    }
    if (n > kMaxVertices)
        throw Graph6ParseError("graph order " + std::to_string(n) +
                                   " exceeds supported maximum 64",
                               0);

    Graph g(static_cast<int>(n));
    int bits = 0, buf = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                buf = next();
                bits = 6;
            }
            if ((buf >> (bits - 1)) & 1) g.add_edge(i, j);
            --bits;
        }
    }
    if (pos != text.size())
        throw Graph6ParseError("trailing bytes after graph6 body", pos);
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
        out.push_back(static_cast<char>((n & 63) + kLo));
    }
    int bits = 0, buf = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(buf + kLo));
                bits = 0;
                buf = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((buf << (6 - bits)) + kLo));
    return out;
}

}  // namespace ortho
