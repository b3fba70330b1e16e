#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ortho/bound_engine.hpp"
#include "ortho/certificate.hpp"
#include "ortho/families.hpp"

using namespace ortho;
using nlohmann::json;

TEST_CASE("rule names roundtrip") {
    for (Rule r : {Rule::Base, Rule::Clique, Rule::Parallel, Rule::HiddenEdge,
                   Rule::SelfComplementary, Rule::Monotone})
        CHECK(rule_from_name(rule_name(r)) == r);
    CHECK(rule_name(Rule::HiddenEdge) == "HIDDEN_EDGE");
    CHECK_THROWS_AS(rule_from_name("NOPE"), CertificateError);
}

TEST_CASE("JSON schema and roundtrip") {
    Graph c4 = generate(parse_family("cycle:4"));
    BoundCertificate c = lower_bound(c4);
    json j = certificate_to_json(c);
    CHECK(j.contains("bound"));
    CHECK(j.contains("rule"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("children"));
    CHECK(j["bound"] == 4);
    CHECK(j["rule"] == "PARALLEL");

    BoundCertificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back) == j);
    CHECK(recheck(back, c4) == c.bound);
}

TEST_CASE("recheck validates engine certificates on known graphs") {
    for (const char* fam : {"cycle:4", "cycle:5", "kn_minus_matching:5",
                            "kn_minus_matching:7", "complement-of:cycle:7",
                            "complete_bipartite_minus_edge:3,3", "paley:13",
                            "petersen", "complete:6"}) {
        Graph g = generate(parse_family(fam));
        BoundCertificate c = lower_bound(g);
        CHECK(recheck(c, g) == c.bound);
    }
}

TEST_CASE("tampered certificates are rejected") {
    Graph c4 = generate(parse_family("cycle:4"));
    const BoundCertificate good = lower_bound(c4);

    SUBCASE("inflated bound") {
        BoundCertificate c = good;
        c.bound += 1;
        CHECK_THROWS_AS(recheck(c, c4), CertificateError);
    }
    SUBCASE("clique witness that is not a clique") {
        BoundCertificate c;
        c.rule = Rule::Clique;
        c.bound = 2;
        c.vertices = {0, 1, 2, 3};
        c.clique = {0, 2};  // non-adjacent in C4
        CHECK_THROWS_AS(recheck(c, c4), CertificateError);
    }
    SUBCASE("parallel witness on an adjacent pair") {
        BoundCertificate c = good;
        REQUIRE(c.rule == Rule::Parallel);
        c.u = 0;
        c.v = 1;  // adjacent in C4: rule does not apply
        CHECK_THROWS_AS(recheck(c, c4), CertificateError);
    }
    SUBCASE("witness outside the node scope") {
        BoundCertificate c = good;
        c.vertices = {0, 1, 2};  // drops a vertex the witnesses use
        CHECK_THROWS_AS(recheck(c, c4), CertificateError);
    }
    SUBCASE("self-complementary rule on a non-self-complementary graph") {
        BoundCertificate c;
        c.rule = Rule::SelfComplementary;
        c.vertices = {0, 1, 2, 3};
        c.bound = 2;
        CHECK_THROWS_AS(recheck(c, c4), CertificateError);
    }
    SUBCASE("malformed JSON") {
        json j = certificate_to_json(good);
        j["rule"] = "NOPE";
        CHECK_THROWS_AS(certificate_from_json(j), CertificateError);
        json j2 = certificate_to_json(good);
        j2.erase("bound");
        CHECK_THROWS_AS(certificate_from_json(j2), CertificateError);
    }
}

TEST_CASE("self-complementary leaf certifies ceil(n/2)") {
    Graph c5 = generate(parse_family("cycle:5"));
    BoundCertificate c = lower_bound(c5);
    CHECK(c.bound == 3);
    CHECK(c.rule == Rule::SelfComplementary);
    CHECK(recheck(c, c5) == 3);
}

TEST_CASE("hidden-edge certificate carries both span sets") {
    Graph g = generate(parse_family("complement-of:cycle:7"));
    BoundCertificate c = lower_bound(g);
    CHECK(c.bound == 5);
    // Find the hidden-edge node in the tree.
    bool found = false;
    std::function<void(const BoundCertificate&)> walk = [&](const BoundCertificate& node) {
        if (node.rule == Rule::HiddenEdge) {
            found = true;
            CHECK(node.u >= 0);
            CHECK(node.v >= 0);
            CHECK_FALSE(node.s1.empty());
            CHECK_FALSE(node.s2.empty());
            REQUIRE(node.children.size() == 2);
            CHECK(node.bound == node.children[0].bound + node.children[1].bound + 1);
        }
        for (const auto& ch : node.children) walk(ch);
    };
    walk(c);
    CHECK(found);
}
