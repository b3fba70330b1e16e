#include "ortho/lovasz.hpp"

#include <cmath>

namespace ortho {

namespace {

constexpr int kMaxAdmmIters = 50000;
constexpr double kAdmmTol = 1e-9;
constexpr double kRho = 2.0;
constexpr double kRelax = 1.6;

// Orthogonal projection onto {X symmetric, X_ij = 0 on edges, trace X = 1}.
Eigen::MatrixXd project_affine(Eigen::MatrixXd m, const Graph& g) {
    m = ((m + m.transpose()) / 2).eval();
    const int n = g.order();
    for (auto [i, j] : g.edges()) m(i, j) = m(j, i) = 0.0;
    const double shift = (1.0 - m.trace()) / n;
    for (int i = 0; i < n; ++i) m(i, i) += shift;
    return m;
}

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace

ThetaResult lovasz_theta(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("lovasz_theta needs n >= 1");
    const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);

    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n) / n;
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd x = z;
    double primal = 1.0, dual = 1.0;
    for (int iter = 0; iter < kMaxAdmmIters; ++iter) {
        x = project_affine(z - u + ones / kRho, g);
        const Eigen::MatrixXd x_relaxed = kRelax * x + (1.0 - kRelax) * z;
        const Eigen::MatrixXd z_old = z;
        z = project_psd(x_relaxed + u);
        u += x_relaxed - z;
        primal = (x - z).cwiseAbs().maxCoeff();
        dual = kRho * (z - z_old).cwiseAbs().maxCoeff();
        if (primal < kAdmmTol && dual < kAdmmTol) break;
    }

    ThetaResult res;
    res.certificate = project_affine(z, g);  // exact on the affine constraints
    res.value = (ones.array() * res.certificate.array()).sum();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(res.certificate);
    const double neg = std::max(0.0, -es.eigenvalues().minCoeff());
    res.precision = std::max({primal, dual, neg});
    res.converged = primal < kAdmmTol && dual < kAdmmTol;
    return res;
}

HandleReport forlo_value(const VectorRepresentation& rep) {
    for (int i = 0; i < rep.order(); ++i)
        if (std::abs(rep.vector(i).norm() - 1.0) > 1e-6)
            throw std::invalid_argument("forlo_value requires unit vectors, vertex " +
                                        std::to_string(i) + " is not");
    const Eigen::MatrixXd m = rep.vectors().transpose() * rep.vectors();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const int last = static_cast<int>(m.rows()) - 1;
    HandleReport h;
    h.value = es.eigenvalues()(last);
    h.handle = es.eigenvectors().col(last);
    for (int i = 0; i < h.handle.size(); ++i) {  // fix the sign deterministically
        if (std::abs(h.handle(i)) > 1e-12) {
            if (h.handle(i) < 0) h.handle = -h.handle;
            break;
        }
    }
    return h;
}

ForloCheck is_forlo(const VectorRepresentation& rep, const Graph& g, double tol,
                    const TolerancePolicy& pol) {
    const VerificationReport v = verify(rep, g, ReprClass::FOR, true, pol);
    if (!v.pass)
        throw std::invalid_argument(
            "is_forlo: representation does not verify as an orthonormal FOR of the graph");
    ForloCheck out;
    out.value = forlo_value(rep).value;
    out.theta = lovasz_theta(g).value;
    out.gap = std::abs(out.value - out.theta);
    out.pass = out.gap <= tol;
    return out;
}

}  // namespace ortho
