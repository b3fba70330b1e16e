#include "ortho/audit.hpp"

#include <algorithm>

#include "ortho/iso.hpp"
#include "ortho/metrics.hpp"

namespace ortho {

namespace {

struct Bracket {
    int lb = 0, ub = 0;
    std::string text() const {
        return lb == ub ? std::to_string(lb)
                        : "[" + std::to_string(lb) + "," + std::to_string(ub) + "]";
    }
};

Bracket bracket(RankCache& cache, const Graph& g, ReprClass cls) {
    const RankResult& r = cache.rank(g, cls);
    return {r.lb, r.ub};
}

// Three-valued "x <= y" on brackets.
AuditVerdict leq(const Bracket& x, const Bracket& y) {
    if (x.ub <= y.lb) return AuditVerdict::Holds;
    if (x.lb > y.ub) return AuditVerdict::Violated;
    return AuditVerdict::Inconclusive;
}

AuditVerdict combine(std::initializer_list<AuditVerdict> vs) {
    AuditVerdict out = AuditVerdict::Holds;
    for (AuditVerdict v : vs) {
        if (v == AuditVerdict::Violated) return AuditVerdict::Violated;
        if (v == AuditVerdict::Inconclusive) out = AuditVerdict::Inconclusive;
    }
    return out;
}

}  // namespace

std::string audit_verdict_name(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::Holds: return "HOLDS";
        case AuditVerdict::Violated: return "VIOLATED";
        case AuditVerdict::Inconclusive: return "INCONCLUSIVE";
        case AuditVerdict::Skipped: return "SKIPPED";
    }
    throw std::logic_error("unreachable audit verdict");
}

AuditReport theorem_audit(int max_n, RankCache& cache) {
    AuditReport report;
    const auto item = [&](const std::string& check, const std::string& inst,
                          AuditVerdict v, std::string detail) {
        report.items.push_back({check, inst, v, std::move(detail)});
    };

    for (const CatalogEntry& entry : default_catalog()) {
        const Graph g = generate(entry.spec);
        const int n = g.order();
        if (n > max_n) continue;
        const Graph comp = g.complement();

        // Chain through a minimum cut of the complement:
        // rank(comp - VC) <= rank(comp) <= rank(comp - VC) + |VC| <= n - |VC|.
        if (comp.order() >= 3 && comp.is_connected() && !comp.is_complete()) {
            const std::vector<int> vc = minimum_vertex_cut(comp);
            uint64_t vc_mask = 0;
            for (int v : vc) vc_mask |= uint64_t{1} << v;
            const int m = static_cast<int>(vc.size());
            const Graph rest = comp.induced(comp.vertex_mask() & ~vc_mask);
            const Bracket br = bracket(cache, rest, ReprClass::FOR);
            const Bracket bc = bracket(cache, comp, ReprClass::FOR);
            const Bracket shifted{br.lb + m, br.ub + m};
            const Bracket cap{n - m, n - m};
            const AuditVerdict v =
                combine({leq(br, bc), leq(bc, shifted), leq(shifted, cap)});
            item("cut_chain", entry.name, v,
                 "rank(comp-VC)=" + br.text() + " rank(comp)=" + bc.text() +
                     " |VC|=" + std::to_string(m) + " n=" + std::to_string(n));
        } else {
            item("cut_chain", entry.name, AuditVerdict::Skipped,
                 "complement has no vertex cut");
        }

        // Regular graphs: faithful rank <= general-position rank <= 2r.
        bool regular = n > 0;
        for (int v = 1; v < n; ++v) regular = regular && g.degree(v) == g.degree(0);
        if (regular && n > 0) {
            const int r = g.degree(0);
            const Bracket bf = bracket(cache, g, ReprClass::FOR);
            const Bracket bp = bracket(cache, g, ReprClass::ORGP);
            const AuditVerdict v = combine({leq(bf, bp), leq(bp, {2 * r, 2 * r})});
            item("regular_bracket", entry.name, v,
                 "faithful=" + bf.text() + " general_position=" + bp.text() +
                     " 2r=" + std::to_string(2 * r));
        } else {
            item("regular_bracket", entry.name, AuditVerdict::Skipped, "not regular");
        }

        // Self-complementary floor: rank >= ceil(n/2).
        if (is_self_complementary(g)) {
            const Bracket b = bracket(cache, g, ReprClass::FOR);
            const int t = (n + 1) / 2;
            const AuditVerdict v = leq({t, t}, b);
            item("selfcomp_floor", entry.name, v,
                 "rank=" + b.text() + " ceil(n/2)=" + std::to_string(t));
        } else {
            item("selfcomp_floor", entry.name, AuditVerdict::Skipped,
                 "not self-complementary");
        }

        // Class chain: general-position >= faithful >= plain orthogonal.
        {
            const Bracket bo = bracket(cache, g, ReprClass::OR);
            const Bracket bf = bracket(cache, g, ReprClass::FOR);
            const Bracket bp = bracket(cache, g, ReprClass::ORGP);
            const AuditVerdict v = combine({leq(bo, bf), leq(bf, bp)});
            item("class_chain", entry.name, v,
                 "or=" + bo.text() + " faithful=" + bf.text() +
                     " general_position=" + bp.text());

            // Exploratory distance: general-position minus faithful <= n-3.
            if (bp.lb == bp.ub && bf.lb == bf.ub) {
                const int dist = bp.ub - bf.ub;
                const AuditVerdict dv =
                    dist <= n - 3 ? AuditVerdict::Holds : AuditVerdict::Violated;
                item("class_distance", entry.name, dv,
                     "distance=" + std::to_string(dist) +
                         " n-3=" + std::to_string(n - 3));
                if (dist > report.max_class_distance) {
                    report.max_class_distance = dist;
                    report.max_class_distance_order = n;
                }
            } else {
                item("class_distance", entry.name, AuditVerdict::Inconclusive,
                     "a class rank did not close");
            }
        }
    }
    return report;
}

}  // namespace ortho
