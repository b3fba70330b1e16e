#ifndef ORTHO_ISO_HPP
#define ORTHO_ISO_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

/// Requested computation is outside the supported size range.
class CapabilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical adjacency encoding: the lexicographically greatest sequence of
/// per-vertex "back rows" over all relabelings.  Equal encodings <=>
/// isomorphic graphs.  Exhaustive search with degree pruning; intended for
/// small graphs (n up to ~12).
std::vector<uint64_t> canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Is there an isomorphism g -> h sending u to v?
bool isomorphism_with(const Graph& g, const Graph& h, int u, int v);

bool is_self_complementary(const Graph& g);

inline constexpr int kVertexTransitivityCap = 16;

/// Exhaustive automorphism search per target vertex.
/// Throws CapabilityError for n > kVertexTransitivityCap.
bool is_vertex_transitive(const Graph& g);

}  // namespace ortho

#endif
