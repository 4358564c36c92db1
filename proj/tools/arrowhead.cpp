// arrowhead — command line front end for the family graph library.
//
// Subcommands: generate (serialize a graph), stats (diagnostics as JSON),
// verify (closed forms vs oracles over a level range), route (one shortest
// path). Exit codes: 0 success, 1 verification failures, 2 bad arguments or
// I/O trouble, 3 resource ceiling exceeded.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <arrowhead/arrowhead.hpp>

namespace {

using nlohmann::ordered_json;

struct GraphArgs {
    int n = 0;
    std::string variant = "arrowhead";
    bool directed = false;
    bool undirected = false;
    int max_level = -1;  // unset; fall back to environment, then default
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_level = true) {
    if (with_level) cmd->add_option("--n", args.n, "graph level n")->required();
    cmd->add_option("--variant", args.variant, "generator variant")
        ->check(CLI::IsMember({"arrowhead", "diamond"}))
        ->required();
    cmd->add_flag("--directed", args.directed, "use the three positive generators");
    cmd->add_flag("--undirected", args.undirected, "use generators and inverses");
    cmd->add_option("--max-level", args.max_level,
                    "resource ceiling for BFS-backed work (overrides ARROWHEAD_MAX_LEVEL)")
        ->check(CLI::Range(0, arrowhead::kMaxRepresentableLevel));
}

arrowhead::Directedness resolve_directedness(const GraphArgs& args) {
    if (args.directed == args.undirected) {
        throw std::invalid_argument("pass exactly one of --directed / --undirected");
    }
    return args.directed ? arrowhead::Directedness::directed
                         : arrowhead::Directedness::undirected;
}

arrowhead::Variant resolve_variant(const GraphArgs& args) {
    return args.variant == "arrowhead" ? arrowhead::Variant::arrowhead
                                       : arrowhead::Variant::diamond;
}

int resolve_max_level(int flag_value) {
    if (flag_value >= 0) return flag_value;
    if (const char* env = std::getenv("ARROWHEAD_MAX_LEVEL")) {
        const std::string text(env);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("ARROWHEAD_MAX_LEVEL is not an integer: " + text);
        }
        if (used != text.size() || value < 0 || value > arrowhead::kMaxRepresentableLevel) {
            throw std::invalid_argument("ARROWHEAD_MAX_LEVEL out of range: " + text);
        }
        return value;
    }
    return arrowhead::kDefaultMaxLevel;
}

arrowhead::GraphSpec build_graph(const GraphArgs& args) {
    return arrowhead::make_graph(args.n, resolve_variant(args), resolve_directedness(args),
                                 resolve_max_level(args.max_level));
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

/// Line count of the edge_list serialization, computed without enumeration:
/// one line per arc when directed; one per edge for n >= 1, and one per
/// generator slot (all loops) at n = 0.
std::uint64_t edge_line_count(const arrowhead::GraphSpec& g) {
    if (g.directed()) return g.arc_slots();
    return g.level().n() == 0 ? g.arc_slots() : g.arc_slots() / 2;
}

ordered_json stats_json(const arrowhead::GraphSpec& g) {
    const arrowhead::Family family = arrowhead::family_of(g.variant(), g.directedness());
    const int n = g.level().n();

    ordered_json j;
    j["family"] = arrowhead::to_string(family);
    j["variant"] = arrowhead::to_string(g.variant());
    j["directed"] = g.directed();
    j["n"] = n;
    j["order"] = g.vertex_count();
    j["degree"] = g.degree();
    j[g.directed() ? "arcs" : "edges"] = edge_line_count(g);

    std::uint64_t formula_diameter = 0;
    switch (family) {
        case arrowhead::Family::undirected_T:
            formula_diameter = arrowhead::undirected_diameter(n);
            break;
        case arrowhead::Family::directed_AT:
            formula_diameter = arrowhead::directed_arrowhead_diameter(n);
            break;
        case arrowhead::Family::directed_DT:
            formula_diameter = arrowhead::directed_diamond_diameter(n);
            break;
    }
    const arrowhead::DistanceField field = arrowhead::bfs_from(g, {0, 0});
    const arrowhead::DistanceHistogram histogram = arrowhead::distance_histogram(field);
    j["diameter"] = {{"formula", formula_diameter},
                     {"oracle", histogram.counts.size() - 1}};

    // The closed-form count is undefined at n = 0 except for the directed
    // diamond; emit null there and let the oracle column speak.
    ordered_json count;
    if (family == arrowhead::Family::directed_DT || n >= 1) {
        count["formula"] = arrowhead::antipodal_count(family, n);
    } else {
        count["formula"] = nullptr;
    }
    count["oracle"] = histogram.counts.back();
    j["antipodal_count"] = count;

    if (family != arrowhead::Family::directed_DT && n >= 1) {
        const arrowhead::AntipodalSummary anchor = arrowhead::antipodal_anchor(n);
        j["antipodal_anchor"] = {{"provenance", "formula"},
                                 {"label", std::string(1, anchor.label)},
                                 {"vertex", {anchor.anchor.x, anchor.anchor.y}},
                                 {"swapped", {anchor.anchor_swapped.x, anchor.anchor_swapped.y}}};
    }

    j["histogram"] = {{"provenance", "oracle"}, {"counts", histogram.counts}};
    return j;
}

int cmd_generate(const GraphArgs& args, const std::string& format_name,
                 const std::string& out_path) {
    const arrowhead::ExportFormat format = arrowhead::export_format_from_string(format_name);
    const arrowhead::GraphSpec g = build_graph(args);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        out = &file;
    }
    switch (format) {
        case arrowhead::ExportFormat::edge_list: arrowhead::write_edge_list(g, *out); break;
        case arrowhead::ExportFormat::dot: arrowhead::write_dot(g, *out); break;
        case arrowhead::ExportFormat::adjacency_csv:
            arrowhead::write_adjacency_csv(g, *out);
            break;
        case arrowhead::ExportFormat::json_stats: *out << stats_json(g).dump(2) << "\n"; break;
    }
    out->flush();
    if (out != &std::cout && !*out) {
        throw std::invalid_argument("failed writing output file: " + out_path);
    }
    return 0;
}

int cmd_stats(const GraphArgs& args) {
    std::cout << stats_json(build_graph(args)).dump(2) << "\n";
    return 0;
}

int cmd_route(const GraphArgs& args, const std::string& from_text,
              const std::string& to_text) {
    const arrowhead::GraphSpec g = build_graph(args);
    const arrowhead::TorusVertex from = arrowhead::parse_vertex(from_text, g.level());
    const arrowhead::TorusVertex to = arrowhead::parse_vertex(to_text, g.level());
    const std::vector<arrowhead::TorusVertex> path = arrowhead::shortest_path(g, from, to);
    std::cout << "length " << path.size() - 1 << "\n";
    std::string line;
    for (const arrowhead::TorusVertex& v : path) {
        if (!line.empty()) line += " ";
        line += "(" + arrowhead::to_string(v) + ")";
    }
    std::cout << line << "\n";
    return 0;
}

int cmd_verify(const std::string& range_text, const std::string& families_text,
               const std::string& claims_text, std::uint64_t seed, int max_level_flag,
               const std::string& out_path) {
    arrowhead::SweepOptions opts;
    const auto dots = range_text.find("..");
    try {
        if (dots == std::string::npos) {
            opts.n_min = opts.n_max = std::stoi(range_text);
        } else {
            opts.n_min = std::stoi(range_text.substr(0, dots));
            opts.n_max = std::stoi(range_text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad level range '" + range_text +
                                    "' (expected N or MIN..MAX)");
    }
    opts.families.clear();
    for (const std::string& token : split_csv(families_text)) {
        opts.families.push_back(arrowhead::family_from_string(token));
    }
    if (!claims_text.empty()) opts.claims = split_csv(claims_text);
    opts.seed = seed;
    opts.max_level = resolve_max_level(max_level_flag);

    const auto start = std::chrono::steady_clock::now();
    const arrowhead::VerificationReport report = arrowhead::run_sweep(opts);
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cerr << "verify: " << report.checks.size() << " checks in " << elapsed_ms
              << " ms\n";

    const std::string serialized = arrowhead::serialize_report(report);
    if (out_path.empty()) {
        std::cout << serialized;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << serialized;
        file.flush();
        if (!file) throw std::invalid_argument("failed writing output file: " + out_path);
        std::cout << arrowhead::format_report_table(report);
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arrowhead/diamond Cayley torus toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", arrowhead::kToolVersion);

    GraphArgs generate_args;
    std::string generate_format = "edge_list";
    std::string generate_out = "-";
    CLI::App* generate = app.add_subcommand("generate", "serialize one graph");
    add_graph_options(generate, generate_args);
    generate->add_option("--format", generate_format, "output format")
        ->check(CLI::IsMember({"edge_list", "dot", "adjacency_csv", "json_stats"}));
    generate->add_option("--out", generate_out, "output path ('-' for stdout)");

    GraphArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "graph diagnostics as JSON");
    add_graph_options(stats, stats_args);

    GraphArgs route_args;
    std::string route_from, route_to;
    CLI::App* route = app.add_subcommand("route", "one shortest path");
    add_graph_options(route, route_args);
    route->add_option("from", route_from, "source vertex 'x,y'")->required();
    route->add_option("to", route_to, "target vertex 'x,y'")->required();

    std::string verify_range = "1..8";
    std::string verify_families = "T,ATdir,DTdir";
    std::string verify_claims;
    std::uint64_t verify_seed = 0;
    int verify_max_level = -1;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "closed forms vs exact oracles");
    verify->add_option("--n", verify_range, "level range MIN..MAX (or a single level)");
    verify->add_option("--families", verify_families, "comma list of T, ATdir, DTdir");
    verify->add_option("--claims", verify_claims, "comma list of claim ids (default: all)");
    verify->add_option("--seed", verify_seed, "seed for sampled spot checks");
    verify->add_option("--max-level", verify_max_level,
                       "resource ceiling; oracle claims above it are skipped")
        ->check(CLI::Range(0, arrowhead::kMaxRepresentableLevel));
    verify->add_option("--out", verify_out, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(generate)) {
            return cmd_generate(generate_args, generate_format, generate_out);
        }
        if (app.got_subcommand(stats)) return cmd_stats(stats_args);
        if (app.got_subcommand(route)) return cmd_route(route_args, route_from, route_to);
        return cmd_verify(verify_range, verify_families, verify_claims, verify_seed,
                          verify_max_level, verify_out);
    } catch (const arrowhead::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
