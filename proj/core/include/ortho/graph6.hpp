#ifndef ORTHO_GRAPH6_HPP
#define ORTHO_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ortho/graph.hpp"

namespace ortho {

/// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Decode a graph6 string (printable 6-bit encoding, offset 63,
/// upper-triangle column order).  Supports n <= 64.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace ortho

#endif
