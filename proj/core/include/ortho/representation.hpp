#ifndef ORTHO_REPRESENTATION_HPP
#define ORTHO_REPRESENTATION_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

/// Numerical thresholds separating "orthogonal", "non-orthogonal" and
/// "parallel" verdicts on normalized inner products.
struct TolerancePolicy {
    double tau_orth = 1e-7;      // |cos| <= tau_orth counts as orthogonal
    double eps_nonorth = 1e-3;   // |cos| >= eps_nonorth counts as non-orthogonal
    double eps_parallel = 1e-3;  // |cos| >= 1 - eps_parallel counts as parallel
    double tau_rank = 1e-8;      // singular values below this count as zero

    void validate() const {
        if (!(tau_orth > 0 && eps_nonorth > 0 && eps_parallel > 0 && tau_rank > 0))
            throw std::invalid_argument("tolerance thresholds must be positive");
        if (!(tau_orth < eps_nonorth))
            throw std::invalid_argument("tau_orth must be below eps_nonorth");
    }
};

/// One real vector per vertex, row i of an n x d matrix.
class VectorRepresentation {
public:
    explicit VectorRepresentation(Eigen::MatrixXd vectors) : m_(std::move(vectors)) {
        if (m_.rows() < 1 || m_.cols() < 1)
            throw std::invalid_argument("representation needs n >= 1, d >= 1");
    }

    int order() const { return static_cast<int>(m_.rows()); }
    int dimension() const { return static_cast<int>(m_.cols()); }
    const Eigen::MatrixXd& vectors() const { return m_; }
    Eigen::RowVectorXd vector(int i) const { return m_.row(i); }

    VectorRepresentation restricted(uint64_t mask) const {
        const auto verts = mask_vertices(mask);
        Eigen::MatrixXd sub(verts.size(), m_.cols());
        for (size_t k = 0; k < verts.size(); ++k) sub.row(k) = m_.row(verts[k]);
        return VectorRepresentation(std::move(sub));
    }

    VectorRepresentation zero_padded(int extra_dims = 1) const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_.rows(), m_.cols() + extra_dims);
        out.leftCols(m_.cols()) = m_;
        return VectorRepresentation(std::move(out));
    }

    VectorRepresentation normalized() const {
        Eigen::MatrixXd out = m_;
        for (int i = 0; i < out.rows(); ++i) {
            const double nv = out.row(i).norm();
            if (nv > 0) out.row(i) /= nv;
        }
        return VectorRepresentation(std::move(out));
    }

private:
    Eigen::MatrixXd m_;
};

enum class ReprClass { OR, FOR, ORGP, FORLO };

Eigen::MatrixXd gram(const VectorRepresentation& rep);

struct OrthogonalityGraph {
    Graph graph;
    /// Pairs whose normalized |inner product| fell between tau_orth and
    /// eps_nonorth; a non-empty list means the representation is unreliable.
    std::vector<std::pair<int, int>> ambiguous;
};

OrthogonalityGraph orthogonality_graph(const VectorRepresentation& rep,
                                       const TolerancePolicy& pol = {});

struct VerificationReport {
    bool pass = false;
    std::vector<std::pair<int, int>> edge_violations;     // edges not orthogonal
    std::vector<std::pair<int, int>> nonedge_violations;  // non-edges orthogonal or ambiguous
    std::vector<std::pair<int, int>> parallel_pairs;
    std::vector<std::vector<int>> dependent_subsets;      // general-position failures
    std::vector<int> zero_vectors;
    std::vector<int> norm_violations;
    bool subsets_exhaustive = true;
    long subsets_checked = 0;
    double max_edge_cos = 0.0;
    double min_nonedge_cos = 1.0;
    double max_pair_cos = 0.0;
};

/// Checks `rep` against g for the requested class.  FORLO here verifies the
/// FOR conditions (Lovasz-number attainment is checked separately).
/// Throws std::invalid_argument on order mismatch.
VerificationReport verify(const VectorRepresentation& rep, const Graph& g,
                          ReprClass cls, bool orthonormal,
                          const TolerancePolicy& pol = {});

/// Count of singular values above pol.tau_rank.
int numerical_rank(const VectorRepresentation& rep, const TolerancePolicy& pol = {});

/// File format: first line "n d", then one whitespace-separated d-vector per
/// line; written with 17 significant digits.
VectorRepresentation load_representation(std::istream& in);
void save_representation(std::ostream& out, const VectorRepresentation& rep);

/// A FOR of g in dimension n built from the Gram matrix I + delta * N,
/// N the non-edge indicator.  Exists for every graph; used as the
/// dimension-n fallback witness.
VectorRepresentation perturbed_basis(const Graph& g, double delta = 0.05);

/// Subset-sampling threshold: general-position checks are exhaustive up to
/// this order, sampled above it.
inline constexpr int kExhaustiveSubsetCap = 12;
inline constexpr int kSampledSubsets = 200;

}  // namespace ortho

#endif
