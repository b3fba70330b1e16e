#ifndef ORTHO_SOLVER_HPP
#define ORTHO_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "ortho/certificate.hpp"
#include "ortho/graph.hpp"
#include "ortho/representation.hpp"

namespace ortho {

struct SolveOptions {
    int restarts = 200;
    int max_iters = 5000;
    uint64_t seed = 0;
    ReprClass cls = ReprClass::FOR;
    bool orthonormal = true;
    TolerancePolicy pol{};
    double initial_step = 0.1;  // fallback step; backtracking halves from here
};

enum class SolveStatus { Found, NotFound };

struct SolveReport {
    SolveStatus status = SolveStatus::NotFound;
    std::optional<VectorRepresentation> rep;  // present iff Found
    double max_edge_ip = 0.0;
    double min_nonedge_ip = 1.0;
    double max_pair_cos = 0.0;
    double best_penalty = std::numeric_limits<double>::infinity();
    int restarts_used = 0;
    uint64_t seed = 0;
};

enum class RankStatus { Exact, Gap };

struct RankResult {
    int lb = 0;
    int ub = 0;
    RankStatus status = RankStatus::Gap;
    BoundCertificate certificate;
    std::optional<VectorRepresentation> witness;  // absent only if nothing closed at n
};

struct PolishResult {
    VectorRepresentation rep;
    bool polished = false;  // false: did not reach the residual target, input returned
    double max_edge_residual = 0.0;
};

/// Penalty over unit vectors: squared edge inner products, hinge terms
/// pushing non-edges away from orthogonality (skipped for class OR) and all
/// pairs away from parallelism, plus a log-determinant barrier on sampled
/// d-subsets for class ORGP.  `subsets` may be empty.
double penalty(const Eigen::MatrixXd& v, const Graph& g, ReprClass cls,
               const TolerancePolicy& pol,
               const std::vector<std::vector<int>>& subsets = {});

/// Euclidean gradient of `penalty` (before sphere projection).
Eigen::MatrixXd penalty_gradient(const Eigen::MatrixXd& v, const Graph& g, ReprClass cls,
                                 const TolerancePolicy& pol,
                                 const std::vector<std::vector<int>>& subsets = {});

/// Seeded multistart projected-gradient search for a representation of g in
/// dimension d.  FOUND only when the result re-verifies under repr-core;
/// NOT_FOUND is evidence, not an infeasibility proof.  Deterministic in
/// (g, d, opts); the witness comes from the lowest successful restart index.
SolveReport feasible_for(const Graph& g, int d, const SolveOptions& opts = {});

/// Engine lower bound (leaf rules only for OR/ORGP, whose vectors need not
/// be faithful) plus incremental solver search for the upper bound, starting
/// at d = lb.  For class FOR the perturbed-Gram basis closes d = n.
RankResult orthogonal_rank(const Graph& g, ReprClass cls = ReprClass::FOR,
                           const SolveOptions& opts = {});

/// Alternating projection: re-orthogonalize each vector against its
/// neighbors' span, renormalize, sweep until max edge residual < 1e-12 or
/// 100 sweeps.  On failure the input is passed through with polished=false.
PolishResult polish(const VectorRepresentation& rep, const Graph& g,
                    const SolveOptions& opts = {});

}  // namespace ortho

#endif
