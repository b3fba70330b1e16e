#ifndef ORTHO_CERTIFICATE_HPP
#define ORTHO_CERTIFICATE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ortho/graph.hpp"

namespace ortho {

enum class Rule {
    Base,
    Clique,
    Parallel,
    HiddenEdge,
    SelfComplementary,
    Monotone,
};

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

/// Proof tree for a dimension lower bound.  All vertex indices refer to the
/// labeling of the graph the root certificate was computed for; each node
/// applies to the induced subgraph on `vertices`.
struct BoundCertificate {
    int bound = 0;
    Rule rule = Rule::Base;
    std::vector<int> vertices;

    // Rule-specific witnesses.
    int u = -1, v = -1;          // Parallel / HiddenEdge pair
    std::vector<int> clique;     // Clique
    std::vector<int> common;     // Parallel common neighborhood
    std::vector<int> s1, s2;     // HiddenEdge span sets
    int deleted_vertex = -1;     // Monotone

    int depth_budget = 0;
    std::vector<BoundCertificate> children;
};

class CertificateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json certificate_to_json(const BoundCertificate& c);
BoundCertificate certificate_from_json(const nlohmann::json& j);

/// Independent walker: recomputes the bound from the witnesses alone and
/// checks every witness against g.  Throws CertificateError on any
/// inconsistency; returns the recomputed bound (== c.bound).
int recheck(const BoundCertificate& c, const Graph& g);

}  // namespace ortho

#endif
