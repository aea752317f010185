// Command-line surface for the spectral-minimizer toolkit: compute invariants,
// build families, apply graph surgeries, enumerate classes, run exhaustive
// minimizations, and drive the verification battery.
//
// Exit codes: 0 success, 1 runtime failure (or a refuted claim under
// `verify --strict`), 2 usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rhomin/canonical.hpp"
#include "rhomin/charpoly.hpp"
#include "rhomin/domination.hpp"
#include "rhomin/enumerate.hpp"
#include "rhomin/families.hpp"
#include "rhomin/graph.hpp"
#include "rhomin/graph6.hpp"
#include "rhomin/spectral.hpp"
#include "rhomin/transforms.hpp"
#include "rhomin/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using rhomin::Graph;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) throw CLI::ValidationError("list", "empty entry in '" + s + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::pair<int, int> parse_edge(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
        throw CLI::ValidationError("edge", "expected u-v, got '" + s + "'");
    return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

// The three mutually exclusive graph input modes.
struct GraphInput {
    std::string graph6;
    std::string edges;
    std::string family;
    std::string params;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6-encoded graph");
        cmd->add_option("--edges", edges, "edge list u-v,u-v,...");
        cmd->add_option("--family", family,
                        "family name (star|path|h|g1|g2|w|p_half_corona|h_prime)");
        cmd->add_option("--params", params, "family parameters, comma separated");
    }

    Graph build() const {
        const int modes = (!graph6.empty() ? 1 : 0) + (!edges.empty() ? 1 : 0) +
                          (!family.empty() ? 1 : 0);
        if (modes != 1)
            throw CLI::ValidationError(
                "input", "need exactly one of --graph6 / --edges / --family");
        if (!graph6.empty()) return rhomin::parse_graph6(graph6);
        if (!edges.empty()) {
            std::vector<std::pair<int, int>> e;
            std::stringstream ss(edges);
            std::string tok;
            int n = 0;
            while (std::getline(ss, tok, ',')) {
                auto pr = parse_edge(tok);
                e.push_back(pr);
                n = std::max(n, std::max(pr.first, pr.second) + 1);
            }
            return rhomin::build_graph(n, e);
        }
        return rhomin::make_family(family, parse_int_list(params));
    }
};

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["graph6"] = rhomin::emit_graph6(g);
    return j;
}

int env_int(const char* name, int fallback) {
    if (const char* v = std::getenv(name)) {
        int x = std::atoi(v);
        if (x > 0) return x;
    }
    return fallback;
}

struct Common {
    std::string format = "text";
    std::string out;
    int threads = 0;
};

void add_common(CLI::App* cmd, Common& c, std::string default_format) {
    c.format = std::move(default_format);
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "graph6", "text"}));
    cmd->add_option("--out", c.out, "write output to file instead of stdout");
    cmd->add_option("--threads", c.threads, "worker threads (default: RHOMIN_THREADS or hardware)");
}

void apply_threads(const Common& c) {
    if (c.threads > 0) rhomin::set_sweep_threads(c.threads);
}

// ---- verify battery ----------------------------------------------------

std::vector<rhomin::VerificationReport> run_battery(const std::string& claim, int max_n,
                                                    std::optional<int> n_opt, int trials,
                                                    std::uint64_t seed) {
    using namespace rhomin;
    std::vector<VerificationReport> reports;
    auto for_range = [&](int lo, int hi, int step, auto&& fn) {
        if (n_opt) {
            if (*n_opt >= lo && *n_opt <= hi && (*n_opt - lo) % step == 0) fn(*n_opt);
            return;
        }
        for (int n = lo; n <= std::min(hi, max_n); n += step) fn(n);
    };
    const bool all = claim == "all";
    if (all || claim == "minimizer_is_tree")
        for_range(1, 9, 1, [&](int n) { reports.push_back(verify_minimizer_is_tree(n)); });
    if (all || claim == "gamma_small")
        for_range(1, 18, 1, [&](int n) { reports.push_back(verify_gamma_small(n)); });
    if (all || claim == "gamma3")
        for_range(11, 18, 1, [&](int n) { reports.push_back(verify_gamma3(n)); });
    if (all || claim == "distance_three")
        for_range(1, 16, 1, [&](int n) { reports.push_back(verify_distance_three(n)); });
    if (all || claim == "corona_even")
        for_range(2, 16, 2, [&](int n) { reports.push_back(verify_corona_even(n)); });
    if (all || claim == "conjecture_odd")
        for_range(5, 15, 2, [&](int n) { reports.push_back(check_conjecture_odd(n)); });
    if (all || claim == "lemmas")
        for (const char* id : {"slide", "shift", "subdivide", "balance", "subgraph"})
            reports.push_back(verify_lemma_suite(id, trials, seed));
    if (claim.rfind("lemma_", 0) == 0)
        reports.push_back(verify_lemma_suite(claim.substr(6), trials, seed));
    if (all || claim == "identities")
        for (auto& r : verify_identity_suite(std::min(max_n, 25))) reports.push_back(std::move(r));
    if (reports.empty() && !all)
        throw CLI::ValidationError("claim", "unknown claim '" + claim + "'");
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-radius minimizers over graphs with fixed domination number"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "1.0.0");

    // ---- spectral ----
    auto* sp = app.add_subcommand("spectral", "power-iteration spectral radius");
    GraphInput sp_in;
    sp_in.add_flags(sp);
    Common sp_c;
    add_common(sp, sp_c, "text");
    double sp_tol = 1e-12;
    bool sp_perron = false;
    sp->add_option("--tol", sp_tol, "residual tolerance");
    sp->add_flag("--perron", sp_perron, "include the Perron vector (json)");

    // ---- charpoly ----
    auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial");
    GraphInput cp_in;
    cp_in.add_flags(cp);
    Common cp_c;
    add_common(cp, cp_c, "text");

    // ---- domination ----
    auto* dm = app.add_subcommand("domination", "exact domination number with witness");
    GraphInput dm_in;
    dm_in.add_flags(dm);
    Common dm_c;
    add_common(dm, dm_c, "text");

    // ---- family ----
    auto* fa = app.add_subcommand("family", "construct a named family graph");
    GraphInput fa_in;  // uses --family/--params only
    fa_in.add_flags(fa);
    Common fa_c;
    add_common(fa, fa_c, "graph6");

    // ---- transform ----
    auto* tr = app.add_subcommand("transform", "graph surgeries and path queries");
    GraphInput tr_in;
    tr_in.add_flags(tr);
    Common tr_c;
    add_common(tr, tr_c, "graph6");
    std::string tr_op;
    tr->add_option("--op", tr_op, "operation")
        ->required()
        ->check(CLI::IsMember({"subdivide", "slide", "shift", "tr1", "tr2", "diamond", "balance",
                               "internal-paths", "pendant-paths"}));
    std::string tr_edge, tr_spath, tr_tpath, tr_ws, tr_set;
    int tr_k = 1, tr_at = -1, tr_u = -1, tr_v = -1, tr_a = -1, tr_b = -1;
    tr->add_option("--edge", tr_edge, "edge u-v (subdivide)");
    tr->add_option("--k", tr_k, "vertices to insert, 1 or 2 (subdivide)");
    tr->add_option("--at", tr_at, "anchor vertex (slide, tr1, tr2, pendant-paths)");
    tr->add_option("--s-path", tr_spath, "shorter pendant path, comma ids (slide)");
    tr->add_option("--t-path", tr_tpath, "longer pendant path, comma ids (slide)");
    tr->add_option("--u", tr_u, "receiving vertex (shift, balance)");
    tr->add_option("--v", tr_v, "losing vertex (shift, balance)");
    tr->add_option("--ws", tr_ws, "neighbors to move, comma ids (shift)");
    tr->add_option("--set", tr_set, "dominating set, comma ids (tr1, tr2, diamond)");
    tr->add_option("--a", tr_a, "pendant count at u (balance)");
    tr->add_option("--b", tr_b, "pendant count at v (balance)");

    // ---- enumerate ----
    auto* en = app.add_subcommand("enumerate", "isomorphism classes as graph6 lines");
    Common en_c;
    add_common(en, en_c, "graph6");
    int en_n = 1;
    std::optional<int> en_gamma;
    bool en_trees = false, en_count = false;
    en->add_option("--n", en_n, "vertex count")->required();
    en->add_option("--gamma", en_gamma, "restrict to this domination number");
    en->add_flag("--trees-only", en_trees, "free trees instead of all connected graphs");
    en->add_flag("--count", en_count, "print only the class count");

    // ---- minimize ----
    auto* mi = app.add_subcommand("minimize", "exhaustive spectral-radius minimization");
    Common mi_c;
    add_common(mi, mi_c, "json");
    int mi_n = 1;
    std::optional<int> mi_gamma;
    bool mi_trees = false, mi_graphs = false, mi_approx = false, mi_plot = false;
    mi->add_option("--n", mi_n, "vertex count")->required();
    mi->add_option("--gamma", mi_gamma, "domination number of the class");
    mi->add_flag("--trees", mi_trees, "minimize over free trees (default)");
    mi->add_flag("--all-graphs", mi_graphs, "minimize over all connected graphs");
    mi->add_flag("--approx", mi_approx, "skip the exact playoff (floating result only)");
    mi->add_flag("--plot-data", mi_plot,
                 "emit CSV of (a, rho) over the long double-broom family at this n");

    // ---- verify ----
    auto* ve = app.add_subcommand("verify", "claim verification battery");
    Common ve_c;
    add_common(ve, ve_c, "json");
    std::string ve_claim = "all";
    std::optional<int> ve_n;
    int ve_maxn = env_int("RHOMIN_MAX_N", 25);
    int ve_trials = 500;
    std::uint64_t ve_seed = 42;
    bool ve_strict = false;
    ve->add_option("claim", ve_claim,
                   "all|minimizer_is_tree|gamma_small|gamma3|distance_three|corona_even|"
                   "conjecture_odd|lemmas|lemma_<id>|identities");
    ve->add_option("--n", ve_n, "run a single n instead of the claim's full range");
    ve->add_option("--max-n", ve_maxn, "cap every per-n range (default: RHOMIN_MAX_N or 25)");
    ve->add_option("--trials", ve_trials, "randomized trials per lemma suite");
    ve->add_option("--seed", ve_seed, "seed for randomized suites");
    ve->add_flag("--strict", ve_strict, "exit 1 if any claim is refuted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) {
            apply_threads(sp_c);
            Graph g = sp_in.build();
            rhomin::SpectralResult r = rhomin::spectral_radius(g, sp_tol);
            if (sp_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["graph"] = graph_json(g);
                j["rho"] = r.rho;
                j["iterations"] = r.iterations;
                j["residual"] = r.residual;
                if (sp_perron) j["perron"] = r.perron;
                emit(sp_c.out, j.dump(2));
            } else if (sp_c.format == "csv") {
                emit(sp_c.out, "rho,iterations,residual\n" + fmt(r.rho) + "," +
                                   std::to_string(r.iterations) + "," + fmt(r.residual) + "\n");
            } else {
                emit(sp_c.out, fmt(r.rho));
            }
            return 0;
        }

        if (cp->parsed()) {
            apply_threads(cp_c);
            Graph g = cp_in.build();
            rhomin::IntPoly p = rhomin::char_poly(g);
            if (cp_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["graph"] = graph_json(g);
                j["degree"] = p.degree();
                j["coefficients_low_to_high"] = p.coeff_strings();
                j["display"] = p.to_string();
                emit(cp_c.out, j.dump(2));
            } else if (cp_c.format == "csv") {
                std::string s = "power,coefficient\n";
                auto cs = p.coeff_strings();
                for (size_t i = 0; i < cs.size(); ++i)
                    s += std::to_string(i) + "," + cs[i] + "\n";
                emit(cp_c.out, s);
            } else {
                emit(cp_c.out, p.to_string());
            }
            return 0;
        }

        if (dm->parsed()) {
            apply_threads(dm_c);
            Graph g = dm_in.build();
            rhomin::DominationCertificate c = rhomin::domination_number(g);
            if (dm_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["graph"] = graph_json(g);
                j["gamma"] = c.gamma;
                j["witness"] = c.witness;
                j["method"] = c.method;
                emit(dm_c.out, j.dump(2));
            } else if (dm_c.format == "csv") {
                std::string w;
                for (size_t i = 0; i < c.witness.size(); ++i)
                    w += (i ? ";" : "") + std::to_string(c.witness[i]);
                emit(dm_c.out, "gamma,witness,method\n" + std::to_string(c.gamma) + "," + w +
                                   "," + c.method + "\n");
            } else {
                emit(dm_c.out, std::to_string(c.gamma));
            }
            return 0;
        }

        if (fa->parsed()) {
            if (fa_in.family.empty())
                throw CLI::ValidationError("family", "--family NAME is required");
            Graph g = fa_in.build();
            if (fa_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["family"] = fa_in.family;
                j["params"] = parse_int_list(fa_in.params);
                j["graph"] = graph_json(g);
                emit(fa_c.out, j.dump(2));
            } else {
                emit(fa_c.out, rhomin::emit_graph6(g));
            }
            return 0;
        }

        if (tr->parsed()) {
            Graph g = tr_in.build();
            if (tr_op == "internal-paths" || tr_op == "pendant-paths") {
                std::vector<std::vector<int>> paths;
                if (tr_op == "internal-paths") {
                    for (const auto& p : rhomin::internal_paths(g)) paths.push_back(p.vertices);
                } else {
                    if (tr_at < 0) throw CLI::ValidationError("at", "--at VERTEX is required");
                    for (const auto& p : rhomin::pendant_paths_at(g, tr_at))
                        paths.push_back(p.vertices);
                }
                if (tr_c.format == "json") {
                    ordered_json j;
                    j["schema_version"] = 1;
                    j["graph"] = graph_json(g);
                    j["op"] = tr_op;
                    j["paths"] = paths;
                    emit(tr_c.out, j.dump(2));
                } else {
                    std::string s;
                    for (const auto& p : paths) {
                        for (size_t i = 0; i < p.size(); ++i)
                            s += (i ? "," : "") + std::to_string(p[i]);
                        s += "\n";
                    }
                    emit(tr_c.out, s);
                }
                return 0;
            }
            Graph result = g;
            if (tr_op == "subdivide") {
                if (tr_edge.empty()) throw CLI::ValidationError("edge", "--edge u-v is required");
                result = rhomin::subdivide(g, parse_edge(tr_edge), tr_k);
            } else if (tr_op == "slide") {
                if (tr_at < 0) throw CLI::ValidationError("at", "--at VERTEX is required");
                result = rhomin::slide_path(g, tr_at, parse_int_list(tr_spath),
                                            parse_int_list(tr_tpath));
            } else if (tr_op == "shift") {
                result = rhomin::shift_edges(g, tr_u, tr_v, parse_int_list(tr_ws));
            } else if (tr_op == "tr1" || tr_op == "tr2") {
                if (tr_at < 0) throw CLI::ValidationError("at", "--at VERTEX is required");
                auto d = parse_int_list(tr_set);
                result = tr_op == "tr1" ? rhomin::tr1(g, d, tr_at) : rhomin::tr2(g, d, tr_at);
            } else if (tr_op == "diamond") {
                result = rhomin::diamond_reduce(g, parse_int_list(tr_set));
            } else if (tr_op == "balance") {
                result = rhomin::balance_pendants(g, tr_u, tr_v, tr_a, tr_b);
            }
            if (tr_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["op"] = tr_op;
                j["input"] = graph_json(g);
                j["output"] = graph_json(result);
                emit(tr_c.out, j.dump(2));
            } else {
                emit(tr_c.out, rhomin::emit_graph6(result));
            }
            return 0;
        }

        if (en->parsed()) {
            apply_threads(en_c);
            rhomin::ClassQuery q{en_n, en_gamma, en_trees};
            std::vector<std::string> lines;
            rhomin::class_members(q, [&](const Graph& g) { lines.push_back(rhomin::emit_graph6(g)); });
            if (en_count) {
                emit(en_c.out, std::to_string(lines.size()));
            } else if (en_c.format == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["n"] = en_n;
                if (en_gamma)
                    j["gamma"] = *en_gamma;
                else
                    j["gamma"] = nullptr;
                j["trees_only"] = en_trees;
                j["count"] = lines.size();
                j["classes"] = lines;
                emit(en_c.out, j.dump(2));
            } else {
                std::string s;
                for (const auto& l : lines) s += l + "\n";
                emit(en_c.out, s);
            }
            return 0;
        }

        if (mi->parsed()) {
            apply_threads(mi_c);
            if (mi_plot) {
                // Family cross-section at fixed n: one row per pendant count a.
                std::string s = "a,rho\n";
                for (int a = 1; 2 * a + 7 <= mi_n; ++a) {
                    Graph g = rhomin::g2(a, mi_n - 2 * a - 7, a);
                    s += std::to_string(a) + "," + fmt(rhomin::spectral_radius(g, 1e-12).rho) +
                         "\n";
                }
                emit(mi_c.out, s);
                return 0;
            }
            if (mi_trees && mi_graphs)
                throw CLI::ValidationError("class", "--trees and --all-graphs conflict");
            rhomin::ClassQuery q{mi_n, mi_gamma, !mi_graphs};
            rhomin::MinimizerReport r = rhomin::find_minimizers(q, !mi_approx);
            if (mi_c.format == "csv") {
                std::string s = "n,gamma,trees_only,class_size,winners,rho_estimate\n";
                std::string w;
                for (size_t i = 0; i < r.winners.size(); ++i) w += (i ? ";" : "") + r.winners[i];
                s += std::to_string(r.n) + "," + (r.gamma ? std::to_string(*r.gamma) : "") + "," +
                     (r.trees_only ? "1" : "0") + "," + std::to_string(r.class_size) + "," + w +
                     "," + fmt(r.rho_estimate) + "\n";
                emit(mi_c.out, s);
            } else if (mi_c.format == "text") {
                std::string w;
                for (size_t i = 0; i < r.winners.size(); ++i) w += (i ? " " : "") + r.winners[i];
                emit(mi_c.out, "winners: " + w + "\nrho ~ " + fmt(r.rho_estimate) +
                                   "\nclass size: " + std::to_string(r.class_size));
            } else {
                emit(mi_c.out, rhomin::to_json(r));
            }
            return 0;
        }

        if (ve->parsed()) {
            apply_threads(ve_c);
            auto reports = run_battery(ve_claim, ve_maxn, ve_n, ve_trials, ve_seed);
            bool refuted = false;
            for (const auto& r : reports)
                refuted = refuted || r.status == rhomin::ClaimStatus::refuted;
            if (ve_c.format == "csv") {
                emit(ve_c.out, rhomin::to_csv(reports));
            } else if (ve_c.format == "text") {
                std::string s;
                for (const auto& r : reports)
                    s += r.claim_id + " [" + r.range + "]: " + to_string(r.status) + "\n";
                emit(ve_c.out, s);
            } else {
                ordered_json arr = ordered_json::array();
                for (const auto& r : reports) arr.push_back(ordered_json::parse(to_json(r)));
                ordered_json j;
                j["schema_version"] = 1;
                j["reports"] = std::move(arr);
                emit(ve_c.out, j.dump(2));
            }
            if (ve_strict && refuted) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
