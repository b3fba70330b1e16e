#ifndef ORTHO_ENUMERATE_HPP
#define ORTHO_ENUMERATE_HPP

#include <istream>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

/// All non-isomorphic graphs on exactly n vertices, by brute force over
/// labeled graphs deduplicated with the canonical form.  Practical for
/// n <= 6; throws std::invalid_argument above 7.
std::vector<Graph> all_graphs(int n, bool connected_only);

/// Graphs from a graph6 stream, one per line; blank lines skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ortho

#endif
