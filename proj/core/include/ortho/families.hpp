#ifndef ORTHO_FAMILIES_HPP
#define ORTHO_FAMILIES_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

enum class FamilyKind {
    Complete,
    Cycle,
    Path,
    Empty,
    CompleteBipartite,
    CompleteBipartiteMinusEdge,  // K_{n,m} minus one edge
    KnMinusMatching,             // F_n = K_n minus a maximum matching
    Petersen,
    Johnson52,
    Paley,
    ComplementOf,
};

/// Named graph family instance; `inner` is used only by ComplementOf.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Empty;
    std::vector<int> args;
    std::shared_ptr<FamilySpec> inner;

    static FamilySpec make(FamilyKind k, std::vector<int> a = {}) {
        FamilySpec s;
        s.kind = k;
        s.args = std::move(a);
        return s;
    }
    static FamilySpec complement_of(FamilySpec in) {
        FamilySpec s;
        s.kind = FamilyKind::ComplementOf;
        s.inner = std::make_shared<FamilySpec>(std::move(in));
        return s;
    }
};

/// Parse "kind:arg[,arg]" (e.g. "cycle:5", "complete_bipartite:3,4",
/// "complement-of:cycle:6").  Throws std::invalid_argument.
FamilySpec parse_family(std::string_view text);

std::string family_name(const FamilySpec& spec);

/// Deterministic labeled instance of the family.
/// Throws std::invalid_argument on bad parameters (e.g. paley on q that is
/// not a prime congruent to 1 mod 4).
Graph generate(const FamilySpec& spec);

}  // namespace ortho

#endif
