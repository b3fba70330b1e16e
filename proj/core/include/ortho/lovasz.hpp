#ifndef ORTHO_LOVASZ_HPP
#define ORTHO_LOVASZ_HPP

#include <Eigen/Dense>

#include "ortho/graph.hpp"
#include "ortho/representation.hpp"

namespace ortho {

struct ThetaResult {
    double value = 0.0;
    Eigen::MatrixXd certificate;  // PSD, trace 1, zero on edges
    double precision = 0.0;       // worst feasibility residual of the iterate
    bool converged = false;
};

/// Lovasz number in the exclusivity convention (adjacent => orthogonal):
/// max <J, X> over PSD X with trace 1 and X_ij = 0 on edges, by alternating
/// projection onto the affine and PSD constraints with over-relaxation.
/// Target accuracy 1e-5 for n <= 15; non-convergence is flagged, not thrown.
ThetaResult lovasz_theta(const Graph& g);

struct HandleReport {
    Eigen::VectorXd handle;  // unit vector maximizing the value
    double value = 0.0;      // sum of squared projections onto the handle
    double gap = 0.0;        // filled by is_forlo
};

/// Largest eigenvalue of sum sigma(i) sigma(i)^T with its eigenvector.
/// Throws std::invalid_argument unless all vectors are unit within 1e-6.
HandleReport forlo_value(const VectorRepresentation& rep);

struct ForloCheck {
    bool pass = false;
    double value = 0.0;
    double theta = 0.0;
    double gap = 0.0;  // |value - theta|
};

/// Does rep attain the Lovasz number of g?  rep must verify as a FOR of g;
/// verification failure throws std::invalid_argument.
ForloCheck is_forlo(const VectorRepresentation& rep, const Graph& g, double tol = 1e-3,
                    const TolerancePolicy& pol = {});

}  // namespace ortho

#endif
