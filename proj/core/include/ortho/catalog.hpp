#ifndef ORTHO_CATALOG_HPP
#define ORTHO_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "ortho/bound_engine.hpp"
#include "ortho/families.hpp"
#include "ortho/solver.hpp"

namespace ortho {

struct Claim {
    enum class Kind { Exact, Interval, Conjectured };
    Kind kind = Kind::Exact;
    int lo = 0;
    int hi = 0;  // == lo for Exact / Conjectured

    static Claim exact(int k) { return {Kind::Exact, k, k}; }
    static Claim interval(int a, int b) { return {Kind::Interval, a, b}; }
    static Claim conjectured(int k) { return {Kind::Conjectured, k, k}; }
};

struct CatalogEntry {
    std::string name;
    FamilySpec spec;
    Claim claim;
    std::string note;
};

enum class Verdict { Confirmed, Consistent, Refuted, Inconclusive };

std::string verdict_name(Verdict v);

struct CatalogResult {
    CatalogEntry entry;
    RankResult rank;
    Verdict verdict;
};

/// The known-dimensions regression table.
std::vector<CatalogEntry> default_catalog();

/// Shared rank computations keyed by labeled adjacency rows.
class RankCache {
public:
    explicit RankCache(SolveOptions opts = {}) : opts_(std::move(opts)) {}

    const RankResult& rank(const Graph& g, ReprClass cls = ReprClass::FOR);
    /// Exact value when the sandwich closed, nullopt otherwise.
    std::optional<int> exact(const Graph& g);
    RankOracle oracle();  // exact() as a bound-engine oracle

    const SolveOptions& options() const { return opts_; }

private:
    SolveOptions opts_;
    std::map<std::pair<std::vector<uint64_t>, ReprClass>, RankResult> memo_;
};

/// Judge every catalog entry of order <= max_n against its claim:
/// Confirmed (closed sandwich matches an exact claim), Consistent (bracket
/// inside an interval claim), Refuted (bracket excludes the claim),
/// Inconclusive otherwise.  Deterministic under a fixed opts.seed.
std::vector<CatalogResult> catalog_run(int max_n, RankCache& cache);

Verdict judge(const Claim& claim, const RankResult& rank);

}  // namespace ortho

#endif
