// Command-line front end: construct catalogue orientations, verify the whole
// table, and run the exhaustive orientation search on small graphs.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "orientlab/constructions.hpp"
#include "orientlab/io.hpp"
#include "orientlab/report.hpp"
#include "orientlab/search.hpp"

using namespace orientlab;

namespace {

nlohmann::json arcs_json(const Orientation& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : d.arcs()) arr.push_back({u + 1, v + 1});
    return arr;
}

int cmd_construct(const std::string& id, const std::string& out_prefix,
                  const std::string& format) {
    ConstructionResult r = build_construction(id);
    if (!out_prefix.empty()) {
        std::ofstream arcs(out_prefix + ".arcs");
        write_arc_list(arcs, r.orient);
        std::ofstream dot(out_prefix + ".dot");
        write_dot(dot, r.orient, r.id);
        std::ofstream edges(out_prefix + ".edges");
        write_edge_list(edges, r.orient.base);
        std::cout << r.id << ": wrote " << out_prefix << ".arcs/.dot/.edges\n";
        return 0;
    }
    if (format == "dot") {
        write_dot(std::cout, r.orient, r.id);
    } else if (format == "json") {
        nlohmann::json j;
        j["id"] = r.id;
        j["order"] = r.orient.base.n;
        j["claimed_diameter"] = r.claimed_diameter;
        j["claim_exact"] = r.claim_exact;
        j["class_claim"] = r.claimed_class;
        j["arcs"] = arcs_json(r.orient);
        std::cout << j.dump(2) << "\n";
    } else {
        write_arc_list(std::cout, r.orient);
    }
    return 0;
}

int cmd_family(const std::string& kind, int size, const std::string& format) {
    auto fam = family_from_string(kind);
    if (!fam) {
        std::cerr << "unknown family '" << kind << "'\n";
        return 1;
    }
    Graph g = build_family(*fam, size);
    if (format == "tree") {
        if (!is_tree(g)) {
            std::cerr << "family '" << kind << "' is not a tree\n";
            return 1;
        }
        // Parent array rooted at vertex 1.
        std::vector<int> parent(g.n, 0);
        auto dist = bfs_dist(g, 0);
        for (int v = 1; v < g.n; ++v)
            for (int w : g.adj[v])
                if (dist[w] + 1 == dist[v]) parent[v] = w + 1;
        for (int v = 0; v < g.n; ++v) std::cout << parent[v] << (v + 1 == g.n ? "\n" : " ");
    } else {
        write_edge_list(std::cout, g);
    }
    return 0;
}

int cmd_verify_all(const std::string& format, const std::string& out_path) {
    Report rep = verify_all();
    std::string body = format == "json" ? rep.to_json() : rep.to_text();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << body;
    } else {
        std::cout << body;
    }
    return rep.mismatches == 0 ? 0 : 1;
}

int cmd_search(const std::string& path, bool tree_format, int k, long long budget_nodes,
               bool no_symmetry, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    Graph g = tree_format ? read_tree(in) : read_edge_list(in);
    if (!is_connected(g)) {
        std::cerr << "disconnected: no strong orientation\n";
        return 1;
    }
    if (!bridges(g).empty()) {
        std::cerr << "bridged: no strong orientation\n";
        return 1;
    }
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    budget.symmetry = !no_symmetry;

    nlohmann::json j;
    int exit_code = 0;
    if (k > 0) {
        RefuteResult res = refute_diameter(g, k, {}, budget);
        j["k"] = k;
        j["nodes"] = res.stats.nodes;
        j["forced_arcs"] = res.stats.forced_arcs;
        j["pruned_distance"] = res.stats.pruned_distance;
        j["pruned_dead_vertex"] = res.stats.pruned_dead_vertex;
        if (res.outcome == RefuteOutcome::Witness) {
            j["verdict"] = "witness";
            j["arcs"] = arcs_json(*res.witness);
            if (format != "json") {
                std::cout << "witness with diameter <= " << k << ":\n";
                write_arc_list(std::cout, *res.witness);
            }
        } else if (res.outcome == RefuteOutcome::Refuted) {
            j["verdict"] = "refuted";
            if (format != "json")
                std::cout << "refuted: no orientation of diameter <= " << k << " ("
                          << res.stats.nodes << " nodes expanded)\n";
        } else {
            j["verdict"] = "budget-exhausted";
            if (format != "json") std::cout << "budget exhausted, no verdict\n";
            exit_code = 2;
        }
    } else {
        OrientationNumber res = orientation_number(g, budget);
        j["nodes"] = res.stats.nodes;
        if (res.exact) {
            j["verdict"] = "exact";
            j["orientation_number"] = res.lower;
            j["arcs"] = arcs_json(*res.witness);
            if (format != "json") {
                std::cout << "orientation number = " << res.lower << "\n";
                write_arc_list(std::cout, *res.witness);
            }
        } else {
            j["verdict"] = "budget-exhausted";
            j["lower_bound"] = res.lower;
            if (format != "json")
                std::cout << "budget exhausted: orientation number >= " << res.lower << "\n";
            exit_code = 2;
        }
    }
    if (format == "json") std::cout << j.dump(2) << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orientlab: strong orientations of vertex-multiplied product graphs"};
    app.require_subcommand(1);

    std::string id, out_prefix, format = "arcs";
    auto* construct = app.add_subcommand("construct", "emit a catalogue orientation");
    construct->add_option("--id", id, "construction id, e.g. grid:3,2 or tree_tree:4,5")
        ->required();
    construct->add_option("--out", out_prefix, "write <prefix>.arcs/.dot/.edges");
    construct->add_option("--format", format, "stdout format: arcs|dot|json")
        ->check(CLI::IsMember({"arcs", "dot", "json"}));

    std::string fam_kind, fam_format = "edges";
    int fam_size = 0;
    auto* family = app.add_subcommand("family", "emit a standard graph as edge list or tree");
    family->add_option("--kind", fam_kind, "path|cycle|complete|hypercube|star")->required();
    family->add_option("--size", fam_size, "order (hypercube: exponent, star: leaves)")
        ->required();
    family->add_option("--format", fam_format, "edges|tree")
        ->check(CLI::IsMember({"edges", "tree"}));

    std::string va_format = "text", va_out;
    auto* verify = app.add_subcommand("verify-all", "check every catalogued construction");
    verify->add_option("--format", va_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", va_out, "write the report to a file");

    std::string graph_path, s_format = "text";
    bool tree_format = false, no_symmetry = false;
    int k = 0;
    long long budget_nodes = 20'000'000;
    auto* search = app.add_subcommand("search", "exhaustive orientation search");
    search->add_option("--graph", graph_path, "edge-list file ('n m' then 'u v' lines)")
        ->required();
    search->add_flag("--tree", tree_format, "input is a parent array instead of an edge list");
    search->add_option("--k", k, "decide whether some orientation has diameter <= k");
    search->add_option("--budget-nodes", budget_nodes, "search node budget");
    search->add_flag("--no-symmetry", no_symmetry, "disable root symmetry reduction");
    search->add_option("--format", s_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    try {
        if (construct->parsed()) return cmd_construct(id, out_prefix, format);
        if (family->parsed()) return cmd_family(fam_kind, fam_size, fam_format);
        if (verify->parsed()) return cmd_verify_all(va_format, va_out);
        if (search->parsed())
            return cmd_search(graph_path, tree_format, k, budget_nodes, no_symmetry, s_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
