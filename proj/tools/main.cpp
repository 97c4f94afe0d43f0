// boxkit command-line tool: graph generation, neighborhood profiles, boxicity
// bounds, interval-cover construction/verification, and the exact solver.
//
// Exit codes: 0 success, 1 verification or property failure, 2 invalid
// input, 3 budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boxkit/bounds.hpp"
#include "boxkit/exactbox.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/graph_io.hpp"
#include "boxkit/intervals.hpp"
#include "boxkit/profile.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace boxkit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExhausted = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParamError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParamError("cannot open output file: " + out_path);
    out << data;
}

Graph load_graph(const std::string& path) { return read_graph_json(read_file(path)); }

unsigned long long default_node_budget() {
    if (const char* env = std::getenv("BOXKIT_BUDGET_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParamError("BOXKIT_BUDGET_NODES must be a positive integer");
    }
    return SearchBudget{}.max_nodes;
}

std::string young_diagram(const std::vector<long long>& values) {
    std::string out;
    for (long long v : values) {
        if (v <= 0) break;
        if (v > 200) return "(profile too wide for ascii rendering)\n";
        out.append(static_cast<std::size_t>(v), '#');
        out += '\n';
    }
    return out;
}

struct CommonArgs {
    std::string out_path;
    int jobs = 1;
    int cap = 40;
    int max_dim = SearchBudget{}.max_dimension;
    unsigned long long budget_nodes = 0;  // resolved later

    SearchBudget budget() const {
        SearchBudget b;
        b.max_nodes = budget_nodes;
        b.max_dimension = max_dim;
        b.jobs = jobs;
        return b;
    }
    ProfileLimits limits() const {
        ProfileLimits l;
        l.max_vertices = cap;
        l.jobs = jobs;
        return l;
    }
};

json cover_report_json(const VerificationReport& r) {
    json j;
    j["ok"] = r.ok;
    json missing = json::array();
    for (auto [u, v] : r.missing_complement_edges) missing.push_back(json::array({u, v}));
    json extra = json::array();
    for (auto [u, v] : r.extra_complement_edges) extra.push_back(json::array({u, v}));
    j["missing_complement_edges"] = std::move(missing);
    j["extra_complement_edges"] = std::move(extra);
    j["per_rep_edge_counts"] = r.per_rep_edge_counts;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"boxkit: boxicity bounds, interval covers, and exact search for "
                 "Kneser graphs and friends"};
    app.require_subcommand(1);
    CommonArgs args;
    args.budget_nodes = default_node_budget();

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->require_subcommand(1);
    int gk = 0, gn = 0;
    std::string gen_name, gen_format = "json", gen_input;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", args.out_path, "Output file (default stdout)");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", gen_format, "Output format: json or dot")
            ->check(CLI::IsMember({"json", "dot"}));
    };
    auto emit_graph = [&](const Graph& g) {
        emit(write_graph(g, gen_format == "dot" ? GraphFormat::dot : GraphFormat::json),
             args.out_path);
    };

    auto* gen_kneser = gen->add_subcommand("kneser", "Kneser graph on k-subsets of {1..n}");
    gen_kneser->add_option("--k", gk, "Subset size")->required();
    gen_kneser->add_option("--n", gn, "Ground-set size")->required();
    add_output(gen_kneser);
    add_format(gen_kneser);
    gen_kneser->callback([&] { emit_graph(kneser_graph({gk, gn})); });

    auto* gen_line = gen->add_subcommand("linegraph", "Line graph of an input graph");
    gen_line->add_option("input", gen_input, "Graph JSON file")->required();
    add_output(gen_line);
    add_format(gen_line);
    gen_line->callback([&] { emit_graph(line_graph(load_graph(gen_input))); });

    auto* gen_comp = gen->add_subcommand("complement", "Complement of an input graph");
    gen_comp->add_option("input", gen_input, "Graph JSON file")->required();
    add_output(gen_comp);
    add_format(gen_comp);
    gen_comp->callback([&] { emit_graph(complement(load_graph(gen_input))); });

    auto* gen_dc = gen->add_subcommand("double-cover", "Extended double cover");
    gen_dc->add_option("input", gen_input, "Graph JSON file")->required();
    add_output(gen_dc);
    add_format(gen_dc);
    gen_dc->callback([&] { emit_graph(extended_double_cover(load_graph(gen_input))); });

    auto* gen_std = gen->add_subcommand("standard", "Named graph family");
    gen_std->add_option("--name", gen_name, "complete|path|cycle|empty|petersen")->required();
    gen_std->add_option("--n", gn, "Vertex count (ignored for petersen)");
    add_output(gen_std);
    add_format(gen_std);
    gen_std->callback([&] { emit_graph(standard_graph(gen_name, gn)); });

    // ---- profile ------------------------------------------------------
    auto* prof = app.add_subcommand("profile", "Common-neighborhood profile of a graph");
    std::string prof_input, prof_csv;
    int prof_max_i = 0;
    bool prof_young = false;
    prof->add_option("input", prof_input, "Graph JSON file")->required();
    prof->add_option("--max-i", prof_max_i, "Compute c(1..max-i); default: complete profile");
    prof->add_option("--csv", prof_csv, "Also write a two-column CSV (i, c_i)");
    prof->add_flag("--young", prof_young, "Print the profile as an ascii Young diagram");
    prof->add_option("--jobs", args.jobs, "Worker threads for the subset search");
    prof->add_option("--cap", args.cap, "Vertex-count cap for the brute-force search");
    add_output(prof);
    prof->callback([&] {
        Graph g = load_graph(prof_input);
        CommonNeighborProfile p = prof_max_i > 0 ? profile(g, prof_max_i, args.limits())
                                                 : complete_profile(g, args.limits());
        emit(json(p.values).dump(2) + "\n", args.out_path);
        if (!prof_csv.empty()) {
            std::string csv = "i,c\n";
            for (std::size_t i = 0; i < p.values.size(); ++i)
                csv += std::to_string(i + 1) + "," + std::to_string(p.values[i]) + "\n";
            emit(csv, prof_csv);
        }
        if (prof_young) std::cerr << young_diagram(p.values);
    });

    // ---- bounds -------------------------------------------------------
    auto* bnd = app.add_subcommand("bounds", "Aggregate boxicity bounds");
    std::string bnd_input;
    int bk = 0, bn = 0;
    bool with_profile = false, with_exact = false;
    bnd->add_option("input", bnd_input, "Graph JSON file (alternative to --k/--n)");
    bnd->add_option("--k", bk, "Kneser subset size");
    bnd->add_option("--n", bn, "Kneser ground-set size");
    bnd->add_flag("--with-profile", with_profile, "Add the neighborhood-ratio lower bound");
    bnd->add_flag("--with-exact", with_exact, "Add the exact value from the search engine");
    bnd->add_option("--max-dim", args.max_dim, "Dimension cap for the exact search");
    bnd->add_option("--budget", args.budget_nodes, "Node budget for the exact search");
    bnd->add_option("--jobs", args.jobs, "Worker threads");
    bnd->add_option("--cap", args.cap, "Vertex-count cap for profile computation");
    add_output(bnd);
    bnd->callback([&] {
        BoundOptions opt;
        opt.with_profile = with_profile;
        opt.with_exact = with_exact;
        opt.limits = args.limits();
        opt.budget = args.budget();
        BoundReport r;
        if (!bnd_input.empty())
            r = bound_report(load_graph(bnd_input), opt);
        else if (bk > 0 && bn > 0)
            r = bound_report(KneserParams{bk, bn}, opt);
        else
            throw ParamError("bounds: provide a graph file or both --k and --n");
        emit(write_bound_report_json(r), args.out_path);
    });

    // ---- cover --------------------------------------------------------
    auto* cover = app.add_subcommand("cover", "Interval covers");
    cover->require_subcommand(1);
    int ck = 0, cn = 0;
    std::string cover_graph, cover_file;

    auto* cover_build = cover->add_subcommand(
        "build", "Explicit n-2 interval cover for a Kneser graph");
    cover_build->add_option("--k", ck, "Subset size")->required();
    cover_build->add_option("--n", cn, "Ground-set size")->required();
    add_output(cover_build);
    cover_build->callback(
        [&] { emit(write_cover_json(build_upper_cover({ck, cn})), args.out_path); });

    int cover_verify_exit = kExitOk;
    auto* cover_verify = cover->add_subcommand("verify", "Verify a cover against a graph");
    cover_verify->add_option("graph", cover_graph, "Graph JSON file")->required();
    cover_verify->add_option("cover", cover_file, "Cover JSON file")->required();
    add_output(cover_verify);
    cover_verify->callback([&] {
        Graph g = load_graph(cover_graph);
        Cover c = read_cover_json(read_file(cover_file));
        VerificationReport r = verify_cover(g, c);
        emit(cover_report_json(r).dump(2) + "\n", args.out_path);
        if (!r.ok) cover_verify_exit = kExitVerificationFailure;
    });

    // ---- exact --------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "Exact boxicity by complete search");
    std::string exact_input;
    int exact_status = kExitOk;
    exact->add_option("input", exact_input, "Graph JSON file")->required();
    exact->add_option("--max-dim", args.max_dim, "Largest dimension to try");
    exact->add_option("--budget", args.budget_nodes, "Search-tree node budget");
    exact->add_option("--jobs", args.jobs, "Worker threads");
    add_output(exact);
    exact->callback([&] {
        Graph g = load_graph(exact_input);
        auto t0 = std::chrono::steady_clock::now();
        ExactResult r = exact_boxicity(g, args.budget());
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        json j;
        j["status"] = r.exact ? "exact" : "lower-bound";
        j["value"] = r.value;
        j["nodes"] = r.nodes;
        if (r.certificate) j["certificate"] = json::parse(write_certificate_json(*r.certificate));
        emit(j.dump(2) + "\n", args.out_path);
        if (r.exact)
            std::cerr << "boxicity " << r.value << " (nodes=" << r.nodes << ", wall=" << ms
                      << "ms)\n";
        else
            std::cerr << "boxicity >= " << r.value << ", budget exhausted (nodes=" << r.nodes
                      << ", wall=" << ms << "ms)\n";
        if (!r.exact) exact_status = kExitBudgetExhausted;
    });

    // ---- sweep --------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "Parameter grids");
    sweep->require_subcommand(1);
    int sk_min = 2, sk_max = 4, sn_min = 5, sn_max = 12, s_k = 2;
    long long sweep_k_max = 10000;
    int pascal_a_max = 30;
    int sweep_exit = kExitOk;

    auto* sweep_cover = sweep->add_subcommand(
        "cover", "Build and verify covers over a (k, n) grid");
    sweep_cover->add_option("--k-min", sk_min, "Smallest k");
    sweep_cover->add_option("--k-max", sk_max, "Largest k");
    sweep_cover->add_option("--n-min", sn_min, "Smallest n");
    sweep_cover->add_option("--n-max", sn_max, "Largest n");
    add_output(sweep_cover);
    sweep_cover->callback([&] {
        json rows = json::array();
        for (int k = sk_min; k <= sk_max; ++k) {
            for (int n = std::max(sn_min, 2 * k + 1); n <= sn_max; ++n) {
                Cover c = build_upper_cover({k, n});
                VerificationReport r = verify_cover(kneser_graph({k, n}), c);
                rows.push_back(json{{"k", k},
                                    {"n", n},
                                    {"dimension", c.dimension},
                                    {"ok", r.ok}});
                if (!r.ok) sweep_exit = kExitVerificationFailure;
            }
        }
        emit(rows.dump(2) + "\n", args.out_path);
    });

    auto* sweep_formulas = sweep->add_subcommand(
        "formulas", "Arithmetic sanity checks for the closed-form bounds");
    sweep_formulas->add_option("--k-max", sweep_k_max, "Parity sweep upper limit");
    sweep_formulas->add_option("--pascal-a-max", pascal_a_max, "Binomial identity sweep limit");
    add_output(sweep_formulas);
    sweep_formulas->callback([&] {
        json checks = json::array();

        long long parity_bad = 0;
        for (long long k = 1; k <= sweep_k_max; ++k)
            if ((13 * k * k - 11 * k + 16) % 2 != 0) ++parity_bad;
        checks.push_back(json{{"name", "closed-lower-bound-integral"},
                              {"count", sweep_k_max},
                              {"ok", parity_bad == 0}});

        long long order_bad = 0, order_count = 0;
        for (int k = 2; k <= 40; ++k) {
            long long n0 = 2LL * k * k * k - 2LL * k * k + 1;
            for (long long n = n0; n <= n0 + 50; ++n) {
                KneserParams p{k, static_cast<int>(n)};
                auto lo = kneser_lower_bound_closed(p);
                auto up = kneser_upper_bound(p);
                if (!lo || !up || *lo < 1) continue;
                ++order_count;
                if (*lo > *up) ++order_bad;
            }
        }
        checks.push_back(json{{"name", "closed-lower-below-upper"},
                              {"count", order_count},
                              {"ok", order_bad == 0}});

        long long pascal_bad = 0, pascal_count = 0;
        for (int a = 1; a <= pascal_a_max; ++a)
            for (int b = 1; b <= a; ++b)
                for (int c = 1; c < a; ++c) {
                    ++pascal_count;
                    if (binom(a, b) - binom(a - c, b) > c * binom(a - 1, b - 1)) ++pascal_bad;
                }
        checks.push_back(json{{"name", "binomial-difference-bound"},
                              {"count", pascal_count},
                              {"ok", pascal_bad == 0}});

        for (const auto& c : checks)
            if (!c["ok"].get<bool>()) sweep_exit = kExitVerificationFailure;
        emit(checks.dump(2) + "\n", args.out_path);
    });

    auto* sweep_bounds = sweep->add_subcommand("bounds", "Bound reports over an n range");
    sweep_bounds->add_option("--k", s_k, "Subset size")->required();
    sweep_bounds->add_option("--n-min", sn_min, "Smallest n");
    sweep_bounds->add_option("--n-max", sn_max, "Largest n");
    add_output(sweep_bounds);
    sweep_bounds->callback([&] {
        json rows = json::array();
        for (int n = std::max(sn_min, 2 * s_k + 1); n <= sn_max; ++n) {
            BoundReport r = bound_report(KneserParams{s_k, n});
            rows.push_back(json::parse(write_bound_report_json(r)));
        }
        emit(rows.dump(2) + "\n", args.out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitInvalidInput;
    }

    if (cover_verify_exit != kExitOk) return cover_verify_exit;
    if (exact_status != kExitOk) return exact_status;
    if (sweep_exit != kExitOk) return sweep_exit;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExhausted;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
