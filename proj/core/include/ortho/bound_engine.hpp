#ifndef ORTHO_BOUND_ENGINE_HPP
#define ORTHO_BOUND_ENGINE_HPP

#include <functional>
#include <optional>
#include <string>

#include "ortho/certificate.hpp"
#include "ortho/graph.hpp"

namespace ortho {

inline constexpr int kDefaultDepthBudget = 8;

/// Best lower bound on the minimum faithful-representation dimension that
/// the rule family can prove, with its proof tree.  `depth_budget` limits
/// the nesting of the recursive rules (Parallel / HiddenEdge / Monotone);
/// at budget 0 only the leaf rules apply.  Deterministic: equal inputs give
/// identical certificates.
BoundCertificate lower_bound(const Graph& g, int depth_budget = kDefaultDepthBudget);

/// True when the engine proves no faithful representation of g fits in
/// dimension d.  False means "not proved", not feasibility.
bool infeasible_in_dim(const Graph& g, int d, int depth_budget = kDefaultDepthBudget);

/// Answers the minimum faithful-representation dimension of a graph, or
/// nullopt when it cannot decide.  Supplied by callers that can combine the
/// bound engine with a solver.
using RankOracle = std::function<std::optional<int>(const Graph&)>;

struct BannedReport {
    enum class Status { Conclusive, Inconclusive };
    enum class Type { I, II, Both, Unclassified, NotBanned };

    Status status = Status::Inconclusive;
    bool is_critical = false;
    bool is_banned = false;
    /// Largest dimension the graph is banned from (rank - 1); present only
    /// when banned.
    std::optional<int> banned_for;
    Type type = Type::NotBanned;
    std::optional<BoundCertificate> witness;
    std::string note;
};

/// Classifies g as critical / banned using the oracle for exact ranks.
/// Type I means a duplicated (twin) vertex pair exists; type II means the
/// engine's certificate exhibits a hidden edge.
BannedReport classify_banned(const Graph& g, const RankOracle& rank,
                             int depth_budget = kDefaultDepthBudget);

}  // namespace ortho

#endif
