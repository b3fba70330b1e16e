// Command-line front end: rank, lb, solve, verify, theta, forlo-check,
// catalog, conjecture, banned-scan.  Machine output is JSON-lines (--json),
// one record per instance; certificates and witnesses land in --out.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ortho/audit.hpp"
#include "ortho/bound_engine.hpp"
#include "ortho/catalog.hpp"
#include "ortho/conjectures.hpp"
#include "ortho/enumerate.hpp"
#include "ortho/graph6.hpp"
#include "ortho/iso.hpp"
#include "ortho/lovasz.hpp"
#include "ortho/metrics.hpp"
#include "ortho/solver.hpp"

namespace {

using nlohmann::json;
using namespace ortho;

struct GlobalOpts {
    uint64_t seed = 0;
    bool as_json = false;
    std::string out_dir;
};

struct GraphPick {
    std::string family;
    std::string g6;
};

void add_graph_options(CLI::App* cmd, GraphPick& pick) {
    auto* fam = cmd->add_option("--family", pick.family,
                                "family spec, e.g. cycle:5, paley:13, "
                                "complement-of:cycle:7");
    auto* g6 = cmd->add_option("--graph", pick.g6, "graph6 string");
    fam->excludes(g6);
}

std::pair<std::string, Graph> resolve_graph(const GraphPick& pick) {
    if (!pick.family.empty()) {
        const FamilySpec spec = parse_family(pick.family);
        return {family_name(spec), generate(spec)};
    }
    if (!pick.g6.empty()) return {"graph", from_graph6(pick.g6)};
    throw CLI::ValidationError("one of --family or --graph is required");
}

void emit(const GlobalOpts& g, const json& record) {
    if (g.as_json) {
        std::cout << record.dump() << "\n";
    } else {
        std::cout << record.dump(2) << "\n";
    }
}

void write_text(const std::string& dir, const std::string& file,
                const std::string& body) {
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / file);
    out << body;
}

void save_artifacts(const GlobalOpts& g, const std::string& name,
                    const RankResult& r) {
    if (g.out_dir.empty()) return;
    write_text(g.out_dir, name + ".cert.json",
               certificate_to_json(r.certificate).dump(2) + "\n");
    if (r.witness) {
        std::ostringstream body;
        save_representation(body, *r.witness);
        write_text(g.out_dir, name + ".rep", body.str());
    }
}

ReprClass parse_class(const std::string& s) {
    if (s == "or") return ReprClass::OR;
    if (s == "for") return ReprClass::FOR;
    if (s == "orgp") return ReprClass::ORGP;
    throw CLI::ValidationError("--class must be one of or, for, orgp");
}

json rank_record(const std::string& name, const RankResult& r) {
    return json{{"name", name},
                {"lb", r.lb},
                {"ub", r.ub},
                {"status", r.status == RankStatus::Exact ? "EXACT" : "GAP"}};
}

std::vector<ConjectureInstance> load_universe(const std::vector<std::string>& fams,
                                              const std::string& file, int all_n) {
    std::vector<ConjectureInstance> out;
    for (const auto& f : fams) {
        const FamilySpec spec = parse_family(f);
        out.push_back({family_name(spec), generate(spec)});
    }
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open graph6 file: " + file);
        int idx = 0;
        for (const Graph& g : read_graph6_stream(in))
            out.push_back({"g6_" + std::to_string(idx++), g});
    }
    if (all_n > 0) {
        int idx = 0;
        for (const Graph& g : all_graphs(all_n, true))
            out.push_back({"n" + std::to_string(all_n) + "_" + std::to_string(idx++), g});
    }
    if (out.empty())
        throw CLI::ValidationError(
            "universe is empty: give --family, --graph-file or --all-n");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal representation toolkit"};
    app.require_subcommand(1);
    GlobalOpts global;
    app.add_option("--seed", global.seed, "global random seed")->capture_default_str();
    app.add_flag("--json", global.as_json, "JSON-lines machine output");
    app.add_option("--out", global.out_dir,
                   "directory for certificates (<name>.cert.json) and witnesses "
                   "(<name>.rep)");

    int restarts = 200, max_iters = 5000, budget = kDefaultDepthBudget;
    int dim = 0, max_n = 64, all_n = 0;
    std::string cls = "for", rep_file, universe_file, conj_id;
    std::vector<std::string> universe_fams;
    bool orthonormal = true, complement = false;
    double tol = 1e-3;
    GraphPick pick;

    auto* rank_cmd = app.add_subcommand("rank", "certified bracket on the minimum dimension");
    add_graph_options(rank_cmd, pick);
    rank_cmd->add_option("--class", cls, "or|for|orgp")->capture_default_str();
    rank_cmd->add_option("--restarts", restarts)->capture_default_str();
    rank_cmd->add_option("--max-iters", max_iters)->capture_default_str();

    auto* lb_cmd = app.add_subcommand("lb", "rule-engine lower bound with certificate");
    add_graph_options(lb_cmd, pick);
    lb_cmd->add_option("--budget", budget, "recursion depth budget")->capture_default_str();

    auto* solve_cmd = app.add_subcommand("solve", "search a representation at a fixed dimension");
    add_graph_options(solve_cmd, pick);
    solve_cmd->add_option("--dim", dim, "ambient dimension")->required();
    solve_cmd->add_option("--class", cls, "or|for|orgp")->capture_default_str();
    solve_cmd->add_option("--restarts", restarts)->capture_default_str();
    solve_cmd->add_option("--max-iters", max_iters)->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "check a representation file against a graph");
    add_graph_options(verify_cmd, pick);
    verify_cmd->add_option("--rep", rep_file, "representation file")->required();
    verify_cmd->add_option("--class", cls, "or|for|orgp")->capture_default_str();
    verify_cmd->add_flag("--orthonormal,!--no-orthonormal", orthonormal,
                         "require unit vectors");

    auto* theta_cmd = app.add_subcommand("theta", "Lovasz number (adjacent = orthogonal)");
    add_graph_options(theta_cmd, pick);
    theta_cmd->add_flag("--complement", complement, "compute on the complement instead");

    auto* forlo_cmd = app.add_subcommand("forlo-check",
                                         "does the representation attain the Lovasz number");
    add_graph_options(forlo_cmd, pick);
    forlo_cmd->add_option("--rep", rep_file, "representation file")->required();
    forlo_cmd->add_option("--tol", tol)->capture_default_str();

    auto* catalog_cmd = app.add_subcommand("catalog", "known-dimensions regression");
    catalog_cmd->add_option("--max-n", max_n)->capture_default_str();
    catalog_cmd->add_option("--restarts", restarts)->capture_default_str();
    catalog_cmd->add_option("--max-iters", max_iters)->capture_default_str();

    auto* conj_cmd = app.add_subcommand("conjecture", "three-valued conjecture evaluation");
    conj_cmd->add_option("--id", conj_id, "conjecture id")->required();
    conj_cmd->add_option("--family", universe_fams, "universe instance (repeatable)");
    conj_cmd->add_option("--graph-file", universe_file, "graph6 file, one per line");
    conj_cmd->add_option("--all-n", all_n, "all connected graphs on exactly n vertices");
    conj_cmd->add_option("--restarts", restarts)->capture_default_str();
    conj_cmd->add_option("--max-iters", max_iters)->capture_default_str();

    auto* banned_cmd = app.add_subcommand("banned-scan", "classify banned graphs");
    banned_cmd->add_option("--max-n", max_n, "scan all connected graphs up to this order")
        ->capture_default_str();
    banned_cmd->add_option("--graph-file", universe_file, "scan these graphs instead");
    banned_cmd->add_option("--restarts", restarts)->capture_default_str();
    banned_cmd->add_option("--max-iters", max_iters)->capture_default_str();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SolveOptions opts;
        opts.restarts = restarts;
        opts.max_iters = max_iters;
        opts.seed = global.seed;

        if (rank_cmd->parsed()) {
            const auto [name, g] = resolve_graph(pick);
            opts.cls = parse_class(cls);
            const RankResult r = orthogonal_rank(g, opts.cls, opts);
            emit(global, rank_record(name, r));
            save_artifacts(global, name, r);
            return 0;
        }
        if (lb_cmd->parsed()) {
            const auto [name, g] = resolve_graph(pick);
            const BoundCertificate cert = lower_bound(g, budget);
            emit(global, json{{"name", name},
                              {"bound", cert.bound},
                              {"rule", rule_name(cert.rule)}});
            if (!global.out_dir.empty())
                write_text(global.out_dir, name + ".cert.json",
                           certificate_to_json(cert).dump(2) + "\n");
            return 0;
        }
        if (solve_cmd->parsed()) {
            const auto [name, g] = resolve_graph(pick);
            opts.cls = parse_class(cls);
            const SolveReport r = feasible_for(g, dim, opts);
            json rec{{"name", name},
                     {"dim", dim},
                     {"status", r.status == SolveStatus::Found ? "FOUND" : "NOT_FOUND"},
                     {"restarts_used", r.restarts_used},
                     {"seed", r.seed},
                     {"best_penalty", r.best_penalty}};
            if (r.rep) {
                rec["residuals"] = {{"max_edge_ip", r.max_edge_ip},
                                    {"min_nonedge_ip", r.min_nonedge_ip},
                                    {"max_pair_cos", r.max_pair_cos}};
                if (!global.out_dir.empty()) {
                    std::ostringstream body;
                    save_representation(body, *r.rep);
                    write_text(global.out_dir, name + ".rep", body.str());
                    rec["witness_file"] = name + ".rep";
                }
            }
            emit(global, rec);
            return 0;
        }
        if (verify_cmd->parsed()) {
            const auto [name, g] = resolve_graph(pick);
            std::ifstream in(rep_file);
            if (!in) throw std::runtime_error("cannot open representation: " + rep_file);
            const VectorRepresentation rep = load_representation(in);
            const VerificationReport v = verify(rep, g, parse_class(cls), orthonormal);
            json rec{{"name", name},
                     {"pass", v.pass},
                     {"edge_violations", v.edge_violations.size()},
                     {"nonedge_violations", v.nonedge_violations.size()},
                     {"parallel_pairs", v.parallel_pairs.size()},
                     {"dependent_subsets", v.dependent_subsets.size()},
                     {"zero_vectors", v.zero_vectors.size()},
                     {"norm_violations", v.norm_violations.size()},
                     {"max_edge_cos", v.max_edge_cos},
                     {"min_nonedge_cos", v.min_nonedge_cos},
                     {"subsets_exhaustive", v.subsets_exhaustive}};
            emit(global, rec);
            return v.pass ? 0 : 1;
        }
        if (theta_cmd->parsed()) {
            auto [name, g] = resolve_graph(pick);
            if (complement) g = g.complement();
            const ThetaResult t = lovasz_theta(g);
            emit(global, json{{"name", name},
                              {"value", t.value},
                              {"precision", t.precision},
                              {"converged", t.converged}});
            return 0;
        }
        if (forlo_cmd->parsed()) {
            const auto [name, g] = resolve_graph(pick);
            std::ifstream in(rep_file);
            if (!in) throw std::runtime_error("cannot open representation: " + rep_file);
            const VectorRepresentation rep = load_representation(in);
            const ForloCheck c = is_forlo(rep, g, tol);
            emit(global, json{{"name", name},
                              {"value", c.value},
                              {"theta", c.theta},
                              {"gap", c.gap},
                              {"pass", c.pass}});
            return c.pass ? 0 : 1;
        }
        if (catalog_cmd->parsed()) {
            RankCache cache(opts);
            bool refuted = false;
            for (const CatalogResult& r : catalog_run(max_n, cache)) {
                json rec = rank_record(r.entry.name, r.rank);
                rec["claim"] = r.entry.claim.kind == Claim::Kind::Interval
                                   ? json{{"lo", r.entry.claim.lo}, {"hi", r.entry.claim.hi}}
                                   : json(r.entry.claim.lo);
                rec["verdict"] = verdict_name(r.verdict);
                emit(global, rec);
                save_artifacts(global, r.entry.name, r.rank);
                refuted = refuted || r.verdict == Verdict::Refuted;
            }
            return refuted ? 1 : 0;
        }
        if (conj_cmd->parsed()) {
            RankCache cache(opts);
            const auto universe = load_universe(universe_fams, universe_file, all_n);
            const ConjectureReport r = conjecture_run(conj_id, universe, cache);
            json rec{{"id", r.id},
                     {"universe", r.universe},
                     {"instances_tested", r.instances_tested},
                     {"holds", r.holds},
                     {"skipped", r.skipped},
                     {"inconclusive", r.inconclusive},
                     {"disabled", r.disabled}};
            if (!r.interpretation.empty()) rec["interpretation"] = r.interpretation;
            if (!r.note.empty()) rec["note"] = r.note;
            json ces = json::array();
            for (const Counterexample& ce : r.counterexamples)
                ces.push_back(json{{"instance", ce.instance},
                                   {"graph6", ce.graph6},
                                   {"detail", ce.detail},
                                   {"evidence", ce.evidence}});
            rec["counterexamples"] = std::move(ces);
            emit(global, rec);
            if (!global.out_dir.empty())
                write_text(global.out_dir, r.id + ".report.json", rec.dump(2) + "\n");
            return r.counterexamples.empty() ? 0 : 1;
        }
        if (banned_cmd->parsed()) {
            RankCache cache(opts);
            std::vector<ConjectureInstance> universe;
            if (!universe_file.empty()) {
                universe = load_universe({}, universe_file, 0);
            } else {
                if (max_n > 6)
                    throw CLI::ValidationError(
                        "banned-scan --max-n supports at most 6; use --graph-file beyond");
                for (int n = 1; n <= max_n; ++n) {
                    int idx = 0;
                    for (const Graph& g : all_graphs(n, true))
                        universe.push_back(
                            {"n" + std::to_string(n) + "_" + std::to_string(idx++), g});
                }
            }
            const RankOracle oracle = cache.oracle();
            for (const auto& inst : universe) {
                const BannedReport r = classify_banned(inst.graph, oracle);
                json rec{{"name", inst.name},
                         {"graph6", to_graph6(inst.graph)},
                         {"conclusive", r.status == BannedReport::Status::Conclusive},
                         {"critical", r.is_critical},
                         {"banned", r.is_banned}};
                if (r.banned_for) rec["banned_for"] = *r.banned_for;
                switch (r.type) {
                    case BannedReport::Type::I: rec["type"] = "I"; break;
                    case BannedReport::Type::II: rec["type"] = "II"; break;
                    case BannedReport::Type::Both: rec["type"] = "both"; break;
                    case BannedReport::Type::Unclassified: rec["type"] = "unclassified"; break;
                    case BannedReport::Type::NotBanned: rec["type"] = "not_banned"; break;
                }
                if (!r.note.empty()) rec["note"] = r.note;
                emit(global, rec);
                if (r.is_banned && r.witness && !global.out_dir.empty())
                    write_text(global.out_dir, inst.name + ".cert.json",
                               certificate_to_json(*r.witness).dump(2) + "\n");
            }
            return 0;
        }
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
