#ifndef ORTHO_CONJECTURES_HPP
#define ORTHO_CONJECTURES_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ortho/catalog.hpp"
#include "ortho/graph.hpp"

namespace ortho {

struct ConjectureInstance {
    std::string name;
    Graph graph;
};

struct Counterexample {
    std::string instance;
    std::string graph6;
    std::string detail;
    /// Certificates and witness representations sufficient to re-verify the
    /// counterexample offline, without re-running any search.
    nlohmann::json evidence;
};

struct ConjectureReport {
    std::string id;
    std::string universe;
    std::string interpretation;  // fixed reading of any underspecified terms
    int instances_tested = 0;
    int holds = 0;     // decisively satisfied instances
    int skipped = 0;   // hypothesis not applicable
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> inconclusive;  // "name: reason"
    bool disabled = false;
    std::string note;
};

/// Available conjecture ids, in a stable order.
std::vector<std::string> conjecture_ids();

/// Three-valued evaluation of one conjecture over the universe: instances
/// decided only when every rank involved has a closed sandwich; everything
/// else lands in `inconclusive`, never in `holds`.  Unknown ids throw
/// std::invalid_argument listing the available ids.
ConjectureReport conjecture_run(const std::string& id,
                                const std::vector<ConjectureInstance>& universe,
                                RankCache& cache);

/// Standalone acceptance of a counterexample record: re-derives the claim
/// violation from the stored certificates/witnesses only.  Returns false on
/// any mismatch.
bool reverify_counterexample(const std::string& id, const Counterexample& ce);

}  // namespace ortho

#endif
