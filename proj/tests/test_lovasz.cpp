#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "ortho/enumerate.hpp"
#include "ortho/families.hpp"
#include "ortho/lovasz.hpp"
#include "ortho/metrics.hpp"

using namespace ortho;

namespace {

const double kPi = std::acos(-1.0);

double odd_cycle_theta(int n) {  // n odd
    return n * std::cos(kPi / n) / (1 + std::cos(kPi / n));
}

// Orthonormal FOR of C5 in dimension 3 attaining the Lovasz number.
VectorRepresentation c5_umbrella() {
    const double c = std::cos(kPi / 5);
    const double h2 = c / (1 + c);
    Eigen::MatrixXd m(5, 3);
    for (int i = 0; i < 5; ++i) {
        const double a = 4 * kPi * i / 5;
        const double r = std::sqrt(1 - h2);
        m.row(i) << r * std::cos(a), r * std::sin(a), std::sqrt(h2);
    }
    return VectorRepresentation(m);
}

}  // namespace

TEST_CASE("closed-form values") {
    CHECK(lovasz_theta(Graph(5)).value == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(lovasz_theta(generate(parse_family("complete:6"))).value ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lovasz_theta(generate(parse_family("cycle:5"))).value ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
    for (int n : {5, 7, 9, 11}) {
        ThetaResult t = lovasz_theta(generate(parse_family("cycle:" + std::to_string(n))));
        CHECK(t.converged);
        CHECK(t.value == doctest::Approx(odd_cycle_theta(n)).epsilon(1e-5));
    }
    // Bipartite graphs: theta = independence number.
    CHECK(lovasz_theta(generate(parse_family("complete_bipartite:3,4"))).value ==
          doctest::Approx(4.0).epsilon(1e-5));
    CHECK(lovasz_theta(generate(parse_family("cycle:6"))).value ==
          doctest::Approx(3.0).epsilon(1e-5));
    // Petersen: theta = 4.
    CHECK(lovasz_theta(generate(parse_family("petersen"))).value ==
          doctest::Approx(4.0).epsilon(1e-5));
    // Paley(13), self-complementary vertex-transitive: theta = sqrt(13).
    CHECK(lovasz_theta(generate(parse_family("paley:13"))).value ==
          doctest::Approx(std::sqrt(13.0)).epsilon(1e-5));
}

TEST_CASE("certificate is feasible for the program") {
    Graph g = generate(parse_family("cycle:7"));
    ThetaResult t = lovasz_theta(g);
    const auto& x = t.certificate;
    CHECK(std::abs(x.trace() - 1.0) < 1e-7);
    for (auto [a, b] : g.edges()) CHECK(std::abs(x(a, b)) < 1e-7);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
    CHECK(es.eigenvalues().minCoeff() > -1e-7);
    CHECK(x.sum() == doctest::Approx(t.value).epsilon(1e-6));
}

TEST_CASE("alpha <= theta on every graph with n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            ThetaResult t = lovasz_theta(g);
            CHECK(independence_number(g) <= t.value + 1e-4);
            CHECK(t.value <= n + 1e-4);
        }
}

TEST_CASE("forlo_value basics") {
    auto rep = c5_umbrella();
    HandleReport h = forlo_value(rep);
    CHECK(h.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(std::abs(h.handle.norm() - 1.0) < 1e-9);
    // The umbrella handle is the z-axis.
    CHECK(std::abs(std::abs(h.handle(2)) - 1.0) < 1e-9);

    // Rotation invariance of the value.
    Eigen::Matrix3d rot =
        Eigen::AngleAxisd(0.7, Eigen::Vector3d(1, 2, 2).normalized()).toRotationMatrix();
    VectorRepresentation rotated(rep.vectors() * rot.transpose());
    CHECK(std::abs(forlo_value(rotated).value - h.value) < 1e-10);

    // Non-unit input is rejected.
    Eigen::MatrixXd m = rep.vectors();
    m.row(0) *= 2.0;
    CHECK_THROWS_AS(forlo_value(VectorRepresentation(m)), std::invalid_argument);
}

TEST_CASE("is_forlo accepts the C5 umbrella and rejects a non-attaining FOR") {
    Graph c5 = generate(parse_family("cycle:5"));
    ForloCheck chk = is_forlo(c5_umbrella(), c5);
    CHECK(chk.pass);
    CHECK(chk.gap < 1e-3);
    CHECK(chk.theta == doctest::Approx(std::sqrt(5.0)).epsilon(1e-5));

    // The perturbed dimension-5 basis is a valid FOR but far from the
    // Lovasz value.
    VectorRepresentation loose = perturbed_basis(c5).normalized();
    ForloCheck chk2 = is_forlo(loose, c5);
    CHECK_FALSE(chk2.pass);
    CHECK(chk2.gap > 1e-2);

    // Not a FOR of c5 at all: throws.
    VectorRepresentation id(Eigen::MatrixXd::Identity(5, 5));
    CHECK_THROWS_AS(is_forlo(id, c5), std::invalid_argument);
}
