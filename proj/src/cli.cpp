#include "pst/cli.hpp"

#include "pst/builder.hpp"
#include "pst/generators.hpp"
#include "pst/instance_io.hpp"
#include "pst/oracle.hpp"
#include "pst/rotation.hpp"
#include "pst/triangles.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <vector>

namespace pst::cli {

namespace {

std::string edge_list(std::span<const Edge> edges) {
    std::string s = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        s += (i ? ",[" : "[") + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "]";
    }
    return s + "]";
}

struct GenArgs {
    std::string family;
    int n = 0;
    std::uint64_t seed = 1;
    std::uint32_t scale = static_cast<std::uint32_t>(kDefaultPolygonScale);
    std::string out_path;
    bool path_graph = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    const int min_n = a.family == "r-construction" ? 5 : 3;
    if (a.n < min_n) {
        err << "gen " << a.family << ": n must be at least " << min_n << "\n";
        return kBadArguments;
    }
    Instance inst;
    try {
        if (a.family == "complete") {
            inst = random_instance(a.n, a.seed, RandomMode::complete);
        } else if (a.family == "random") {
            inst = random_instance(a.n, a.seed, RandomMode::budgeted);
        } else if (a.family == "path-complement") {
            inst = path_complement(a.n, a.scale);
        } else {
            auto r = r_construction(a.n, a.scale);
            inst = a.path_graph ? std::move(r.path) : std::move(r.complement);
        }
    } catch (const GenerationError& e) {
        err << "generation failed: " << e.what() << "\n";
        return kFailure;
    }
    const std::string path = a.out_path.empty() ? a.family + "-" + std::to_string(a.n) + ".json" : a.out_path;
    try {
        write_text_file(path, to_canonical_json(inst.graph));
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kFailure;
    }
    out << "family=" << a.family << " n=" << a.n << " edges=" << inst.graph.edges().size() << " s=" << inst.s
        << "\n";
    for (const auto& note : inst.notes) {
        out << "note: " << note << "\n";
    }
    out << "wrote " << path << "\n";
    return kOk;
}

int cmd_stats(const GeometricGraph& g, std::ostream& out) {
    const auto empty = enumerate_empty_triangles(g.points());
    const auto s = s_count(g);
    out << "n=" << g.size() << " edges=" << g.edges().size() << " empty_triangles=" << empty.size()
        << " s=" << s.value() << "\n";
    for (const auto& t : s.witnesses) {
        out << "witness " << t.a << " " << t.b << " " << t.c << "\n";
    }
    return kOk;
}

void print_trace(const BuildReport& report, std::ostream& out) {
    for (const auto& t : report.trace) {
        out << "trace depth=" << t.depth << " size=" << t.subset_size << " case=" << to_string(t.tag) << "\n";
    }
    std::string flags;
    if (report.precondition_violated) {
        flags += " precondition_violated";
    }
    if (report.theorem_gap_fallback_used) {
        flags += " theorem_gap_fallback_used";
    }
    if (report.oracle_budget_exceeded) {
        flags += " oracle_budget_exceeded";
    }
    out << "flags:" << (flags.empty() ? " none" : flags) << "\n";
}

int cmd_build(const GeometricGraph& g, const std::string& svg_path, std::uint64_t budget, std::ostream& out,
              std::ostream& err) {
    const auto report = build_plane_tree(g, BuildOptions{budget});
    out << "n=" << g.size() << " s=" << report.s << "\n";
    if (report.tree) {
        out << "tree edges=" << report.tree->edges().size() << " " << edge_list(report.tree->edges()) << "\n";
    } else {
        out << "tree none\n";
    }
    print_trace(report, out);
    if (!svg_path.empty()) {
        try {
            write_text_file(svg_path, render_svg(g, report.tree ? report.tree->edges() : std::span<const Edge>{}));
        } catch (const std::exception& e) {
            err << e.what() << "\n";
            return kFailure;
        }
        out << "wrote " << svg_path << "\n";
    }
    return report.tree ? kOk : kNegative;
}

int cmd_check(const GeometricGraph& g, const std::vector<Edge>& tree, std::ostream& out) {
    const auto cert = certify_plane_spanning_tree(g, tree);
    if (cert) {
        out << "accepted\n";
        return kOk;
    }
    const auto& r = cert.rejection();
    out << "rejected " << to_string(r.kind);
    if (!r.witness.empty()) {
        out << " " << edge_list(r.witness);
    }
    out << ": " << r.message << "\n";
    return kNegative;
}

int cmd_oracle(const GeometricGraph& g, std::uint64_t budget, std::ostream& out) {
    const auto result = has_plane_spanning_tree(g, budget);
    out << to_string(result.status) << " nodes=" << result.nodes << "\n";
    switch (result.status) {
    case OracleStatus::exists:
        out << "witness " << edge_list(result.witness->edges()) << "\n";
        return kOk;
    case OracleStatus::not_exists:
        return kNegative;
    case OracleStatus::budget_exceeded:
        return kBudget;
    }
    return kFailure;
}

int cmd_rotate(const GeometricGraph& g, std::ostream& out, std::ostream& err) {
    if (g.size() < 3) {
        err << "rotate: need at least three points\n";
        return kFailure;
    }
    RotationSequence seq;
    try {
        seq = full_rotation(g.points());
    } catch (const std::logic_error& e) {
        err << e.what() << "\n";
        return kFailure;
    }
    out << dump_rotation(seq);
    out << "lines=" << seq.line_count() << " events=" << seq.event_count() << " |L-|=" << (g.size() + 2) / 2
        << " |L+|=" << (g.size() + 1) / 2 << " opposite=" << seq.opposite_index << " v_1=" << seq.pivots.front()
        << " v_s=" << seq.pivots.back() << "\n";
    out << "invariants ok\n";
    return kOk;
}

struct BatchArgs {
    std::size_t trials = 100;
    int n_min = 5;
    int n_max = 9;
    std::uint64_t seed = 1;
    int oracle_max_n = 9;
    std::uint64_t budget = kDefaultOracleBudget;
};

int cmd_batch(const BatchArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n_min < 3 || a.n_max < a.n_min) {
        err << "batch: need 3 <= n-min <= n-max\n";
        return kBadArguments;
    }
    struct Row {
        std::size_t trials = 0, trees = 0, oracle_checked = 0, failures = 0, gap_flags = 0;
    };
    std::map<int, Row> rows;
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> pick_n(a.n_min, a.n_max);
    for (std::size_t t = 0; t < a.trials; ++t) {
        const int n = pick_n(rng);
        const std::uint64_t trial_seed = rng();
        Row& row = rows[n];
        ++row.trials;
        std::vector<std::string> problems;
        try {
            const auto inst = random_instance(n, trial_seed, RandomMode::budgeted);
            const auto report = build_plane_tree(inst.graph, BuildOptions{a.budget});
            if (report.theorem_gap_fallback_used) {
                ++row.gap_flags;
                problems.emplace_back("split fallback");
            }
            if (report.tree) {
                ++row.trees;
            } else {
                problems.emplace_back("no tree although s <= n - 3");
            }
            if (n <= a.oracle_max_n) {
                ++row.oracle_checked;
                const auto oracle = has_plane_spanning_tree(inst.graph, a.budget);
                if (oracle.status != OracleStatus::exists) {
                    problems.emplace_back(std::string("oracle disagrees: ") + to_string(oracle.status));
                }
            }
            const auto seq = full_rotation(inst.graph.points());
            for (const auto& v : rotation_invariant_violations(seq, inst.graph.points())) {
                problems.push_back("rotation: " + v);
            }
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        if (!problems.empty()) {
            ++row.failures;
            err << "trial " << t << " (n=" << n << ", seed=" << trial_seed << "): " << problems.front() << "\n";
        }
    }
    std::size_t failures = 0;
    out << "   n  trials   trees  oracle  failures  gap_flags\n";
    for (const auto& [n, r] : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%4d %7zu %7zu %7zu %9zu %10zu\n", n, r.trials, r.trees, r.oracle_checked,
                      r.failures, r.gap_flags);
        out << line;
        failures += r.failures;
    }
    out << "total trials=" << a.trials << " failures=" << failures << "\n";
    return failures == 0 ? kOk : kBatchFailures;
}

// Runs a file-reading command, mapping load failures to exit 1.
template <typename F>
int with_instance(const std::string& path, bool require_edges, std::ostream& err, F&& body) {
    GeometricGraph g;
    try {
        g = load_instance(path, require_edges);
    } catch (const std::exception& e) {
        err << path << ": " << e.what() << "\n";
        return kFailure;
    }
    return body(g);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plane spanning trees in geometric graphs with few disconnected empty triangles", "pstree"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance and print its certificate");
    gen_cmd->add_option("family", gen.family, "complete | path-complement | r-construction | random")
        ->required()
        ->check(CLI::IsMember({"complete", "path-complement", "r-construction", "random"}));
    gen_cmd->add_option("n", gen.n, "Number of points")->required();
    gen_cmd->add_option("out", gen.out_path, "Output path (default <family>-<n>.json)");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--scale", gen.scale, "Polygon radius for convex families")->check(CLI::Range(1u, 1u << 30));
    gen_cmd->add_flag("--path-graph", gen.path_graph, "r-construction: write the path instead of its complement");

    std::string in_path;
    auto* stats_cmd = app.add_subcommand("stats", "Print n, edge count, empty triangles and s(G)");
    stats_cmd->add_option("instance", in_path)->required();

    std::string svg_path;
    std::uint64_t budget = kDefaultOracleBudget;
    auto* build_cmd = app.add_subcommand("build", "Build a plane spanning tree");
    build_cmd->add_option("instance", in_path)->required();
    build_cmd->add_option("--svg", svg_path, "Write an SVG drawing");
    build_cmd->add_option("--budget", budget, "Oracle node budget for base cases and fallbacks");

    std::string tree_arg;
    auto* check_cmd = app.add_subcommand("check", "Certify a tree edge list against an instance");
    check_cmd->add_option("instance", in_path)->required();
    check_cmd->add_option("tree", tree_arg, "Edge list file or inline [[i,j],...]")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively decide whether a plane spanning tree exists");
    oracle_cmd->add_option("instance", in_path)->required();
    oracle_cmd->add_option("--budget", budget, "Search node budget");

    BatchArgs batch;
    auto* batch_cmd = app.add_subcommand("batch", "Random campaign: builder, oracle and rotation checks");
    batch_cmd->add_option("--trials", batch.trials);
    batch_cmd->add_option("--n-min", batch.n_min);
    batch_cmd->add_option("--n-max", batch.n_max);
    batch_cmd->add_option("--seed", batch.seed);
    batch_cmd->add_option("--oracle-max-n", batch.oracle_max_n);
    batch_cmd->add_option("--budget", batch.budget);

    auto* rotate_cmd = app.add_subcommand("rotate", "Dump the rotating-line sweep");
    rotate_cmd->add_option("instance", in_path)->required();

    std::vector<const char*> argv{"pstree"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadArguments;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out, err);
        }
        if (stats_cmd->parsed()) {
            return with_instance(in_path, true, err, [&](const GeometricGraph& g) { return cmd_stats(g, out); });
        }
        if (build_cmd->parsed()) {
            return with_instance(in_path, true, err,
                                 [&](const GeometricGraph& g) { return cmd_build(g, svg_path, budget, out, err); });
        }
        if (check_cmd->parsed()) {
            return with_instance(in_path, true, err, [&](const GeometricGraph& g) {
                std::vector<Edge> tree;
                try {
                    const bool is_file = std::filesystem::is_regular_file(tree_arg);
                    tree = parse_edge_list(is_file ? read_text_file(tree_arg) : tree_arg);
                } catch (const std::exception& e) {
                    err << "tree: " << e.what() << "\n";
                    return static_cast<int>(kFailure);
                }
                return cmd_check(g, tree, out);
            });
        }
        if (oracle_cmd->parsed()) {
            return with_instance(in_path, true, err, [&](const GeometricGraph& g) { return cmd_oracle(g, budget, out); });
        }
        if (batch_cmd->parsed()) {
            return cmd_batch(batch, out, err);
        }
        if (rotate_cmd->parsed()) {
            return with_instance(in_path, false, err, [&](const GeometricGraph& g) { return cmd_rotate(g, out, err); });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kBadArguments;
}

}  // namespace pst::cli
