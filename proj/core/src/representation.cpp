#include "ortho/representation.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace ortho {

namespace {

constexpr double kZeroNorm = 1e-8;
constexpr double kOrthonormalTol = 1e-9;

Eigen::MatrixXd normalized_cosines(const VectorRepresentation& rep) {
    const Eigen::MatrixXd& v = rep.vectors();
    Eigen::VectorXd norms = v.rowwise().norm();
    Eigen::MatrixXd cos = (v * v.transpose()).cwiseAbs();
    for (int i = 0; i < cos.rows(); ++i)
        for (int j = 0; j < cos.cols(); ++j) {
            const double denom = norms(i) * norms(j);
            cos(i, j) = denom > 0 ? cos(i, j) / denom : 0.0;
        }
    return cos;
}

}  // namespace

Eigen::MatrixXd gram(const VectorRepresentation& rep) {
    return rep.vectors() * rep.vectors().transpose();
}

OrthogonalityGraph orthogonality_graph(const VectorRepresentation& rep,
                                       const TolerancePolicy& pol) {
    pol.validate();
    const int n = rep.order();
    const Eigen::MatrixXd cos = normalized_cosines(rep);
    OrthogonalityGraph out{Graph(n), {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (cos(i, j) <= pol.tau_orth)
                out.graph.add_edge(i, j);
            else if (cos(i, j) < pol.eps_nonorth)
                out.ambiguous.emplace_back(i, j);
        }
    return out;
}

VerificationReport verify(const VectorRepresentation& rep, const Graph& g,
                          ReprClass cls, bool orthonormal,
                          const TolerancePolicy& pol) {
    pol.validate();
    if (rep.order() != g.order())
        throw std::invalid_argument("representation order " +
                                    std::to_string(rep.order()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
    const int n = rep.order();
    const int d = rep.dimension();
    VerificationReport rpt;

    for (int i = 0; i < n; ++i) {
        const double nv = rep.vector(i).norm();
        if (nv <= kZeroNorm) rpt.zero_vectors.push_back(i);
        if (orthonormal && std::abs(nv - 1.0) > kOrthonormalTol)
            rpt.norm_violations.push_back(i);
    }

    const Eigen::MatrixXd cos = normalized_cosines(rep);
    const bool faithful = (cls != ReprClass::OR);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double c = cos(i, j);
            rpt.max_pair_cos = std::max(rpt.max_pair_cos, c);
            if (c >= 1.0 - pol.eps_parallel) rpt.parallel_pairs.emplace_back(i, j);
            if (g.adjacent(i, j)) {
                rpt.max_edge_cos = std::max(rpt.max_edge_cos, c);
                if (c > pol.tau_orth) rpt.edge_violations.emplace_back(i, j);
            } else {
                rpt.min_nonedge_cos = std::min(rpt.min_nonedge_cos, c);
                // The dead zone (tau_orth, eps_nonorth) invalidates a
                // faithfulness claim rather than rounding either way.
                if (faithful && c < pol.eps_nonorth)
                    rpt.nonedge_violations.emplace_back(i, j);
            }
        }

    if (cls == ReprClass::ORGP && n >= d) {
        const auto check_subset = [&](const std::vector<int>& subset) {
            Eigen::MatrixXd sub(subset.size(), d);
            for (size_t k = 0; k < subset.size(); ++k) sub.row(k) = rep.vector(subset[k]);
            ++rpt.subsets_checked;
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
            if (svd.singularValues().minCoeff() <= pol.tau_rank)
                rpt.dependent_subsets.push_back(subset);
        };
        if (n <= kExhaustiveSubsetCap) {
            std::vector<int> subset(d);
            const auto recurse = [&](auto&& self, int start, int depth) -> void {
                if (depth == d) {
                    check_subset(subset);
                    return;
                }
                for (int v = start; v < n; ++v) {
                    subset[depth] = v;
                    self(self, v + 1, depth + 1);
                }
            };
            recurse(recurse, 0, 0);
        } else {
            rpt.subsets_exhaustive = false;
            std::mt19937_64 rng(0x5eed5eedULL);  // fixed: verification is deterministic
            for (int s = 0; s < kSampledSubsets; ++s) {
                std::vector<int> subset;
                uint64_t chosen = 0;
                while (static_cast<int>(subset.size()) < d) {
                    const int v = static_cast<int>(rng() % n);
                    if (!((chosen >> v) & 1u)) {
                        chosen |= uint64_t{1} << v;
                        subset.push_back(v);
                    }
                }
                check_subset(subset);
            }
        }
    }

    rpt.pass = rpt.edge_violations.empty() && rpt.parallel_pairs.empty() &&
               rpt.nonedge_violations.empty() && rpt.dependent_subsets.empty() &&
               rpt.zero_vectors.empty() && rpt.norm_violations.empty();
    return rpt;
}

int numerical_rank(const VectorRepresentation& rep, const TolerancePolicy& pol) {
    pol.validate();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rep.vectors());
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > pol.tau_rank) ++rank;
    return rank;
}

VectorRepresentation load_representation(std::istream& in) {
    int n = 0, d = 0;
    if (!(in >> n >> d) || n < 1 || d < 1)
        throw std::runtime_error("representation file: bad header (want 'n d')");
    Eigen::MatrixXd m(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            if (!(in >> m(i, j)))
                throw std::runtime_error("representation file: truncated at vertex " +
                                         std::to_string(i));
    return VectorRepresentation(std::move(m));
}

void save_representation(std::ostream& out, const VectorRepresentation& rep) {
    out << rep.order() << ' ' << rep.dimension() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < rep.order(); ++i) {
        for (int j = 0; j < rep.dimension(); ++j)
            out << (j ? " " : "") << rep.vectors()(i, j);
        out << '\n';
    }
}

VectorRepresentation perturbed_basis(const Graph& g, double delta) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("perturbed_basis needs n >= 1");
    // Keep the Gram matrix strictly diagonally dominant.
    delta = std::min(delta, 0.5 / std::max(1, n - 1));
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !g.adjacent(i, j)) m(i, j) = delta;
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("perturbed_basis: Gram factorization failed");
    Eigen::MatrixXd l = llt.matrixL();
    VectorRepresentation rep{std::move(l)};
    return rep.normalized();
}

}  // namespace ortho
