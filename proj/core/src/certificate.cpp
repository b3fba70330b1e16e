#include "ortho/certificate.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ortho/iso.hpp"

namespace ortho {

namespace {

using nlohmann::json;

uint64_t to_mask(const std::vector<int>& verts, const Graph& g, const char* what) {
    uint64_t mask = 0;
    for (int v : verts) {
        if (v < 0 || v >= g.order())
            throw CertificateError(std::string(what) + ": vertex " + std::to_string(v) +
                                   " out of range");
        const uint64_t bit = uint64_t{1} << v;
        if (mask & bit)
            throw CertificateError(std::string(what) + ": vertex " + std::to_string(v) +
                                   " listed twice");
        mask |= bit;
    }
    return mask;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw CertificateError(msg);
}

int recheck_node(const BoundCertificate& c, const Graph& g, uint64_t scope) {
    const uint64_t mask = to_mask(c.vertices, g, "certificate node");
    require((mask & ~scope) == 0, "node vertices escape the parent scope");
    const int k = static_cast<int>(c.vertices.size());

    int recomputed = -1;
    switch (c.rule) {
        case Rule::Base: {
            require(c.children.empty(), "Base node must be a leaf");
            recomputed = std::min(k, 2);
            break;
        }
        case Rule::Clique: {
            require(c.children.empty(), "Clique node must be a leaf");
            const uint64_t cl = to_mask(c.clique, g, "clique witness");
            require((cl & ~mask) == 0, "clique witness escapes node vertices");
            for (size_t a = 0; a < c.clique.size(); ++a)
                for (size_t b = a + 1; b < c.clique.size(); ++b)
                    require(g.adjacent(c.clique[a], c.clique[b]),
                            "clique witness is not a clique");
            recomputed = static_cast<int>(c.clique.size());
            break;
        }
        case Rule::SelfComplementary: {
            require(c.children.empty(), "SelfComplementary node must be a leaf");
            require(is_self_complementary(g.induced(mask)),
                    "subgraph is not self-complementary");
            recomputed = (k + 1) / 2;
            break;
        }
        case Rule::Parallel: {
            require(c.children.size() == 1, "Parallel node needs one child");
            require(c.u >= 0 && c.v >= 0 && c.u != c.v, "Parallel node needs a pair u, v");
            const uint64_t ub = uint64_t{1} << c.u, vb = uint64_t{1} << c.v;
            require((mask & ub) && (mask & vb), "u, v must lie in the node vertices");
            require(!g.adjacent(c.u, c.v), "u, v must be non-adjacent");
            const uint64_t common = to_mask(c.common, g, "common neighborhood");
            require((common & ~(g.neighbors(c.u) & g.neighbors(c.v) & mask)) == 0,
                    "listed common neighborhood is wrong");
            const uint64_t child = to_mask(c.children[0].vertices, g, "Parallel child");
            require((child & ~common) == 0, "child escapes the common neighborhood");
            recomputed = recheck_node(c.children[0], g, common) + 2;
            break;
        }
        case Rule::HiddenEdge: {
            require(c.children.size() == 2, "HiddenEdge node needs two children");
            require(c.u >= 0 && c.v >= 0 && c.u != c.v, "HiddenEdge node needs a pair u, v");
            const uint64_t ub = uint64_t{1} << c.u, vb = uint64_t{1} << c.v;
            require((mask & ub) && (mask & vb), "u, v must lie in the node vertices");
            require(!g.adjacent(c.u, c.v), "u, v must be non-adjacent");
            const uint64_t s1 = to_mask(c.s1, g, "S1");
            const uint64_t s2 = to_mask(c.s2, g, "S2");
            require((s1 & s2) == 0, "S1 and S2 must be disjoint");
            require((s1 & ~(g.neighbors(c.v) & mask & ~ub)) == 0,
                    "S1 must lie in N(v) minus u");
            require((s2 & ~(g.neighbors(c.u) & mask & ~vb)) == 0,
                    "S2 must lie in N(u) minus v");
            for (int a : c.s1)
                for (int b : c.s2)
                    require(g.adjacent(a, b), "S1, S2 must form a complete join");
            require((to_mask(c.children[0].vertices, g, "child 1") & ~s1) == 0,
                    "first child escapes S1");
            require((to_mask(c.children[1].vertices, g, "child 2") & ~s2) == 0,
                    "second child escapes S2");
            recomputed = recheck_node(c.children[0], g, s1) +
                         recheck_node(c.children[1], g, s2) + 1;
            break;
        }
        case Rule::Monotone: {
            require(c.children.size() == 1, "Monotone node needs one child");
            require(c.deleted_vertex >= 0, "Monotone node needs a deleted vertex");
            const uint64_t db = uint64_t{1} << c.deleted_vertex;
            require((mask & db) != 0, "deleted vertex must lie in the node vertices");
            require((to_mask(c.children[0].vertices, g, "Monotone child") & ~(mask & ~db)) == 0,
                    "child must avoid the deleted vertex");
            recomputed = recheck_node(c.children[0], g, mask & ~db);
            break;
        }
    }
    require(recomputed == c.bound,
            "stored bound " + std::to_string(c.bound) + " disagrees with recomputed " +
                std::to_string(recomputed));
    return recomputed;
}

}  // namespace

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::Base: return "BASE";
        case Rule::Clique: return "CLIQUE";
        case Rule::Parallel: return "PARALLEL";
        case Rule::HiddenEdge: return "HIDDEN_EDGE";
        case Rule::SelfComplementary: return "SELF_COMPLEMENTARY";
        case Rule::Monotone: return "MONOTONE";
    }
    throw std::logic_error("unreachable rule");
}

Rule rule_from_name(const std::string& name) {
    if (name == "BASE") return Rule::Base;
    if (name == "CLIQUE") return Rule::Clique;
    if (name == "PARALLEL") return Rule::Parallel;
    if (name == "HIDDEN_EDGE") return Rule::HiddenEdge;
    if (name == "SELF_COMPLEMENTARY") return Rule::SelfComplementary;
    if (name == "MONOTONE") return Rule::Monotone;
    throw CertificateError("unknown rule name: " + name);
}

nlohmann::json certificate_to_json(const BoundCertificate& c) {
    json w;
    w["vertices"] = c.vertices;
    switch (c.rule) {
        case Rule::Base:
        case Rule::SelfComplementary:
            break;
        case Rule::Clique:
            w["clique"] = c.clique;
            break;
        case Rule::Parallel:
            w["u"] = c.u;
            w["v"] = c.v;
            w["common"] = c.common;
            break;
        case Rule::HiddenEdge:
            w["u"] = c.u;
            w["v"] = c.v;
            w["s1"] = c.s1;
            w["s2"] = c.s2;
            break;
        case Rule::Monotone:
            w["deleted_vertex"] = c.deleted_vertex;
            break;
    }
    json children = json::array();
    for (const auto& child : c.children) children.push_back(certificate_to_json(child));
    return json{{"bound", c.bound},
                {"rule", rule_name(c.rule)},
                {"witnesses", std::move(w)},
                {"depth_budget", c.depth_budget},
                {"children", std::move(children)}};
}

BoundCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        BoundCertificate c;
        c.bound = j.at("bound").get<int>();
        c.rule = rule_from_name(j.at("rule").get<std::string>());
        const json& w = j.at("witnesses");
        c.vertices = w.at("vertices").get<std::vector<int>>();
        c.u = w.value("u", -1);
        c.v = w.value("v", -1);
        c.clique = w.value("clique", std::vector<int>{});
        c.common = w.value("common", std::vector<int>{});
        c.s1 = w.value("s1", std::vector<int>{});
        c.s2 = w.value("s2", std::vector<int>{});
        c.deleted_vertex = w.value("deleted_vertex", -1);
        c.depth_budget = j.value("depth_budget", 0);
        for (const auto& cj : j.at("children"))
            c.children.push_back(certificate_from_json(cj));
        return c;
    } catch (const json::exception& e) {
        throw CertificateError(std::string("malformed certificate JSON: ") + e.what());
    }
}

int recheck(const BoundCertificate& c, const Graph& g) {
    return recheck_node(c, g, g.vertex_mask());
}

}  // namespace ortho
