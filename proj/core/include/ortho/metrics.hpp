#ifndef ORTHO_METRICS_HPP
#define ORTHO_METRICS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

/// Exact maximum clique size (branch and bound over bitset candidates).
int clique_number(const Graph& g);

/// One maximum clique, deterministic.
std::vector<int> maximum_clique(const Graph& g);

int independence_number(const Graph& g);

struct Metrics {
    std::optional<int> girth;       // absent for forests
    std::optional<int> diameter;    // absent for disconnected graphs
    std::optional<int> radius;
    std::vector<int> eccentricities;  // -1 where unbounded
    int vertex_connectivity = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = false;
};

Metrics metrics(const Graph& g);

/// All unordered non-adjacent pairs with identical neighborhoods
/// (duplicated vertices).
std::vector<std::pair<int, int>> twins(const Graph& g);

/// Maximum matching (general graphs, blossom augmentation), deterministic.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

/// One minimum vertex cut; empty when the graph is complete or has < 2
/// vertices (no cut exists).
std::vector<int> minimum_vertex_cut(const Graph& g);

struct Structural {
    Graph complement;
    bool is_self_complementary = false;
    /// Absent beyond the automorphism-search size cap.
    std::optional<bool> is_vertex_transitive;
    std::vector<std::pair<int, int>> maximum_matching;
    std::vector<int> cut_vertex_set;
};

Structural structural(const Graph& g);

}  // namespace ortho

#endif
