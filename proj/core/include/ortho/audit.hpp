#ifndef ORTHO_AUDIT_HPP
#define ORTHO_AUDIT_HPP

#include <string>
#include <vector>

#include "ortho/catalog.hpp"

namespace ortho {

enum class AuditVerdict { Holds, Violated, Inconclusive, Skipped };

std::string audit_verdict_name(AuditVerdict v);

struct AuditItem {
    std::string check;     // cut_chain, regular_bracket, selfcomp_floor,
                           // class_chain, class_distance
    std::string instance;
    AuditVerdict verdict = AuditVerdict::Skipped;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;
    /// Largest decisively observed general-position-minus-faithful gap,
    /// with the order it occurred at (exploratory, both ranks estimates).
    int max_class_distance = 0;
    int max_class_distance_order = 0;
};

/// Inequality audit over the catalog instances of order <= max_n.  Each
/// chain link is judged from rank brackets: decided only when the brackets
/// separate, inconclusive otherwise.
AuditReport theorem_audit(int max_n, RankCache& cache);

}  // namespace ortho

#endif
