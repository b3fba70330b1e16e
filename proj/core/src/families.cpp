#include "ortho/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace ortho {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

int require_arg(const FamilySpec& s, size_t i, const char* what) {
    if (i >= s.args.size())
        throw std::invalid_argument(std::string("family ") + family_name(s) +
                                    ": missing argument " + what);
    return s.args[i];
}

struct KindName {
    FamilyKind kind;
    const char* name;
    int arity;
};

constexpr KindName kKinds[] = {
    {FamilyKind::Complete, "complete", 1},
    {FamilyKind::Cycle, "cycle", 1},
    {FamilyKind::Path, "path", 1},
    {FamilyKind::Empty, "empty", 1},
    {FamilyKind::CompleteBipartite, "complete_bipartite", 2},
    {FamilyKind::CompleteBipartiteMinusEdge, "complete_bipartite_minus_edge", 2},
    {FamilyKind::KnMinusMatching, "kn_minus_matching", 1},
    {FamilyKind::Petersen, "petersen", 0},
    {FamilyKind::Johnson52, "johnson_5_2", 0},
    {FamilyKind::Paley, "paley", 1},
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
    constexpr std::string_view comp = "complement-of:";
    if (text.substr(0, comp.size()) == comp)
        return FamilySpec::complement_of(parse_family(text.substr(comp.size())));

    const size_t colon = text.find(':');
    const std::string_view kind_name = text.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const size_t comma = rest.find(',');
            const std::string tok(rest.substr(0, comma));
            try {
                size_t used = 0;
                args.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("family argument '" + tok +
                                            "' is not an integer");
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    for (const auto& k : kKinds) {
        if (kind_name == k.name) {
            if (static_cast<int>(args.size()) != k.arity)
                throw std::invalid_argument(std::string(k.name) + " expects " +
                                            std::to_string(k.arity) + " argument(s)");
            return FamilySpec::make(k.kind, std::move(args));
        }
    }
    throw std::invalid_argument("unknown family kind '" + std::string(kind_name) + "'");
}

std::string family_name(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::ComplementOf)
        return "complement-of:" + (spec.inner ? family_name(*spec.inner) : "?");
    std::string name = "?";
    for (const auto& k : kKinds)
        if (k.kind == spec.kind) name = k.name;
    for (size_t i = 0; i < spec.args.size(); ++i)
        name += (i == 0 ? ":" : ",") + std::to_string(spec.args[i]);
    return name;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Complete: {
            const int n = require_arg(spec, 0, "n");
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case FamilyKind::Cycle: {
            const int n = require_arg(spec, 0, "n");
            if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case FamilyKind::Path: {
            const int n = require_arg(spec, 0, "n");
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case FamilyKind::Empty:
            return Graph(require_arg(spec, 0, "n"));
        case FamilyKind::CompleteBipartite:
        case FamilyKind::CompleteBipartiteMinusEdge: {
            const int a = require_arg(spec, 0, "n");
            const int b = require_arg(spec, 1, "m");
            if (a < 1 || b < 1)
                throw std::invalid_argument("complete_bipartite requires positive sides");
            Graph g(a + b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
            if (spec.kind == FamilyKind::CompleteBipartiteMinusEdge)
                g.remove_edge(0, a);
            return g;
        }
        case FamilyKind::KnMinusMatching: {
            const int n = require_arg(spec, 0, "n");
            if (n < 2) throw std::invalid_argument("kn_minus_matching requires n >= 2");
            Graph g = generate(FamilySpec::make(FamilyKind::Complete, {n}));
            for (int i = 0; i + 1 < n; i += 2) g.remove_edge(i, i + 1);
            return g;
        }
        case FamilyKind::Petersen: {
            // Kneser K(5,2) labeling: vertices are 2-subsets of {0..4} in
            // lexicographic order, adjacent iff disjoint.
            std::vector<std::pair<int, int>> subsets;
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
            Graph g(10);
            for (int i = 0; i < 10; ++i)
                for (int j = i + 1; j < 10; ++j) {
                    auto [a, b] = subsets[i];
                    auto [c, d] = subsets[j];
                    if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
                }
            return g;
        }
        case FamilyKind::Johnson52:
            // J(5,2): same vertex set, adjacent iff the 2-subsets intersect.
            return generate(FamilySpec::make(FamilyKind::Petersen)).complement();
        case FamilyKind::Paley: {
            const int q = require_arg(spec, 0, "q");
            if (!is_prime(q) || q % 4 != 1)
                throw std::invalid_argument(
                    "paley requires a prime q with q = 1 (mod 4), got " +
                    std::to_string(q));
            if (q > kMaxVertices)
                throw std::invalid_argument("paley order exceeds supported maximum 64");
            std::vector<bool> square(q, false);
            for (int i = 1; i < q; ++i) square[(i * i) % q] = true;
            Graph g(q);
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    if (square[(j - i) % q]) g.add_edge(i, j);
            return g;
        }
        case FamilyKind::ComplementOf: {
            if (!spec.inner)
                throw std::invalid_argument("complement-of requires an inner family");
            return generate(*spec.inner).complement();
        }
    }
    throw std::invalid_argument("unhandled family kind");
}

}  // namespace ortho
