// Command-line surface for the double-Hall toolkit: property checking,
// factor and cycle construction, instance generation, and the conjecture
// search harness. Exit codes: 0 property holds / object found, 1 property
// fails / nothing found (with certificate), 2 usage or parse error, 3 size
// cap, 4 contradiction of a proved guarantee (bug signal).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dhp/dhp.hpp"

namespace {

using namespace dhp;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_ints(const std::vector<int>& xs) {
    if (xs.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

// combined host ids rendered side-aware: a3, b0, ...
std::string host_cycle_str(const BipartiteGraph& g, const std::vector<int>& cyc) {
    std::string out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (i) out += " ";
        if (cyc[i] < g.a_count())
            out += "a" + std::to_string(cyc[i]);
        else
            out += "b" + std::to_string(cyc[i] - g.a_count());
    }
    return out;
}

void check_cap(int value, int def, int requested, bool unsafe, const char* what) {
    if (requested > def && !unsafe)
        throw CLI::ValidationError(std::string(what) +
                                   ": raising the cap beyond " + std::to_string(def) +
                                   " requires --unsafe-cap");
    if (value > requested)
        throw size_cap_error(std::string(what) + ": size " + std::to_string(value) +
                             " exceeds the cap of " + std::to_string(requested));
}

struct Common {
    std::string file;
    std::string format = "text";
    bool general = false;
    bool unsafe_cap = false;
};

int cmd_check_dhp(const Common& c, int cap) {
    std::ostringstream out;
    out << "dhp-report v1\ncommand check-dhp\n";
    DhpVerdict v;
    if (c.general) {
        const Graph g = parse_graph_instance(read_input(c.file));
        check_cap(g.vertex_count(), 24, cap, c.unsafe_cap, "check-dhp");
        v = check_dhp_general(g);
        out << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\n";
    } else {
        const Instance inst = parse_instance(read_input(c.file));
        check_cap(inst.graph.a_count(), 24, cap, c.unsafe_cap, "check-dhp");
        v = check_dhp(inst.graph);
        out << "a-count " << inst.graph.a_count() << "\nb-count " << inst.graph.b_count()
            << "\nedges " << inst.graph.edge_count() << "\n";
    }
    out << "holds " << (v.holds ? "true" : "false") << "\n";
    if (!v.holds) {
        out << "witness " << join_ints(*v.witness) << "\n";
        out << "witness-size " << v.witness->size() << "\n";
        out << "deficiency " << v.deficiency << "\n";
    }
    out << "subsets-examined " << v.subsets_examined << "\n";
    std::cout << out.str();
    return v.holds ? 0 : 1;
}

int cmd_two_factor(const Common& c) {
    if (c.general) {
        const Graph g = parse_graph_instance(read_input(c.file));
        const auto fam = find_general_two_factor(g);
        std::cout << "dhp-report v1\ncommand two-factor\nmode general\nfound "
                  << (fam ? "true" : "false") << "\n";
        if (fam) {
            const std::string bad = validate_general_two_factor(g, *fam);
            if (!bad.empty()) throw contradiction_error(bad);
            std::cout << "cycles " << fam->cycle_count() << "\n";
            for (const auto& cyc : fam->cycles) std::cout << "cycle " << join_ints(cyc) << "\n";
        } else {
            const ConditionReport r = find_belck_violation(g);
            if (r.satisfied)
                throw contradiction_error("no 2-factor yet no violating pair");
            std::cout << "violating-s " << join_ints(*r.violating_s) << "\n";
            std::cout << "violating-t " << join_ints(*r.violating_t) << "\n";
            std::cout << "lhs " << r.lhs << "\nrhs " << r.rhs << "\n";
        }
        return fam ? 0 : 1;
    }
    const Instance inst = parse_instance(read_input(c.file));
    const BipartiteGraph& g = inst.graph;
    const auto fam = find_covering_two_factor(g);
    if (c.format == "dot") {
        std::cout << export_dot(g, fam ? &*fam : nullptr);
        return fam ? 0 : 1;
    }
    std::cout << "dhp-report v1\ncommand two-factor\nfound " << (fam ? "true" : "false")
              << "\n";
    if (fam) {
        const std::string bad = validate_covering_two_factor(g, *fam);
        if (!bad.empty()) throw contradiction_error(bad);
        std::cout << "cycles " << fam->cycle_count() << "\n";
        for (const auto& cyc : fam->cycles)
            std::cout << "cycle " << host_cycle_str(g, cyc) << "\n";
    } else {
        // certify with a violating pair of the parity-factor condition
        const ConditionReport r = find_lovasz_violation_covering(g);
        if (r.satisfied) throw contradiction_error("no factor yet no violating pair");
        std::cout << "violating-s " << join_ints(*r.violating_s) << "\n";
        std::cout << "violating-t " << join_ints(*r.violating_t) << "\n";
        std::cout << "lhs " << r.lhs << "\nrhs " << r.rhs << "\n";
    }
    return fam ? 0 : 1;
}

int cmd_find_cycle(const Common& c, int cap) {
    const Instance inst = parse_instance(read_input(c.file));
    const BipartiteGraph stripped = strip_degree_le1(inst.graph);
    check_cap(stripped.a_count(), 14, cap, c.unsafe_cap, "find-cycle");
    const DhpVerdict verdict = check_dhp(stripped);
    const ColoredMultigraph m = to_colored_multigraph(stripped);
    const RainbowCycleSearch r = find_rainbow_hamiltonian_cycle(m, cap);

    if (c.format == "dot" && r.cycle) {
        const CycleFamily fam = detail::rainbow_to_bipartite_cycle(stripped, m, *r.cycle);
        std::cout << export_dot(stripped, &fam);
        return 0;
    }
    std::cout << "dhp-report v1\ncommand find-cycle\n";
    std::cout << "n " << m.vertex_count << "\ncolors " << m.color_count() << "\n";
    std::cout << "dhp " << (verdict.holds ? "true" : "false") << "\n";
    std::cout << "found " << (r.cycle ? "true" : "false") << "\n";
    if (r.cycle) {
        const std::string bad = validate_rainbow_hamiltonian_cycle(m, *r.cycle);
        if (!bad.empty()) throw contradiction_error(bad);
        const CycleFamily fam = detail::rainbow_to_bipartite_cycle(stripped, m, *r.cycle);
        std::cout << "cycle " << host_cycle_str(stripped, fam.cycles[0]) << "\n";
        std::cout << "colors-used " << join_ints(r.cycle->colors) << "\n";
    } else {
        std::cout << "exhaustive " << (r.exhaustive ? "true" : "false") << "\n";
    }
    std::cout << "nodes-expanded " << r.nodes_expanded << "\n";
    if (!r.cycle && verdict.holds) {
        // an exhaustive miss on a verified instance is a counterexample
        std::cout << "counterexample-candidate true\n";
        const bool oracle_agrees =
            m.vertex_count > 7 || !find_rainbow_cycle_by_permutations(m).has_value();
        const bool still_holds = check_dhp(stripped, false).holds;
        std::cout << "reverified " << ((oracle_agrees && still_holds) ? "true" : "false")
                  << "\n";
        if (!oracle_agrees) throw contradiction_error("permutation oracle disagrees");
    }
    return r.cycle ? 0 : 1;
}

int cmd_cover_deg2n(const Common& c) {
    const Instance inst = parse_instance(read_input(c.file));
    const CoverCycleResult r = cover_cycle_deg_2n(inst.graph);
    const std::string bad = validate_covering_cycle(inst.graph, r.family);
    if (!bad.empty()) throw contradiction_error(bad);
    if (c.format == "dot") {
        std::cout << export_dot(inst.graph, &r.family);
        return 0;
    }
    std::cout << "dhp-report v1\ncommand cover-deg2n\n";
    std::cout << "n " << inst.graph.a_count() << "\n";
    std::cout << "large-colors " << r.large_color_count << "\n";
    std::cout << "paths " << r.path_count << "\n";
    std::cout << "found true\n";
    std::cout << "cycle " << host_cycle_str(inst.graph, r.family.cycles[0]) << "\n";
    return 0;
}

int cmd_thin_colors(const Common& c) {
    const Instance inst = parse_instance(read_input(c.file));
    const BipartiteGraph stripped = strip_degree_le1(inst.graph);
    const ColoredMultigraph m = to_colored_multigraph(stripped);
    const ThinnedColoring t = thin_colors(m);
    const Orientation o = balanced_orientation(thinning_aux_multigraph(m));
    std::cout << "dhp-report v1\ncommand thin-colors\n";
    std::cout << "n " << m.vertex_count << "\ncolors " << m.color_count() << "\n";
    std::cout << "delta " << t.delta << "\n";
    std::cout << "usage-bound " << t.usage_bound << "\n";
    std::cout << "max-usage " << t.max_usage() << "\n";
    std::cout << "orientation-max-imbalance " << o.max_imbalance() << "\n";
    for (int ci = 0; ci < (int)t.usage.size(); ++ci)
        std::cout << "usage " << ci << " " << t.usage[ci] << "\n";
    if (t.max_usage() > t.usage_bound)
        throw contradiction_error("thinning exceeded its guaranteed bound");
    return 0;
}

int cmd_rainbow_path(const std::string& file, int k, int l, int n_override) {
    EdgeColoredGraph g(0);
    std::string source;
    if (!file.empty()) {
        const Instance inst = parse_instance(read_input(file));
        g = to_edge_colored(to_colored_multigraph(strip_degree_le1(inst.graph)));
        source = "instance";
    } else {
        // doubled complete graph: two private colors per pair
        long long n = double_factorial_bound(k, l);
        if (n_override > 0) n = n_override;
        if (n < 2) n = 2;
        g = EdgeColoredGraph((int)n);
        int c = 0;
        for (int u = 0; u < (int)n; ++u)
            for (int v = u + 1; v < (int)n; ++v) {
                g.add_edge_color(u, v, c++);
                g.add_edge_color(u, v, c++);
            }
        source = "doubled-complete";
    }
    std::cout << "dhp-report v1\ncommand rainbow-path\n";
    std::cout << "source " << source << "\n";
    std::cout << "k " << k << "\nl " << l << "\n";
    std::cout << "n " << g.vertex_count << "\nn0 " << double_factorial_bound(k, l) << "\n";
    std::cout << "span-verified " << (g.vertex_count <= 12 ? "exhaustive" : "assumed")
              << "\n";
    const auto p = find_rainbow_path(g, k, l);
    std::cout << "found " << (p ? "true" : "false") << "\n";
    if (p) {
        const std::string bad = validate_rainbow_path(g, *p, l);
        if (!bad.empty()) throw contradiction_error(bad);
        std::cout << "path " << join_ints(p->vertices) << "\n";
        std::cout << "path-colors " << join_ints(p->colors) << "\n";
        return 0;
    }
    throw contradiction_error("guaranteed rainbow path not found");
}

int cmd_gen_tree(int n, bool random, std::uint64_t seed) {
    if (n < 2 || (!random && (n & (n - 1))))
        throw CLI::ValidationError(
            "gen-tree: --n must be a power of two at least 2 (or pass --random)");
    const BinaryTreeSpec t = random ? random_binary_tree(n, seed) : complete_binary_tree(n);
    const BipartiteGraph g = binary_tree_dhp(t);
    InstanceMetadata meta;
    meta.entries["generator"] = random ? "tree-random" : "tree-complete";
    if (random) meta.entries["seed"] = std::to_string(seed);
    std::cout << emit_instance(g, meta);
    return 0;
}

int cmd_sample(int n, int b, const std::string& profile, std::uint64_t seed) {
    SampleConfig cfg;
    cfg.a_count = n;
    cfg.b_count = b;
    cfg.profile = parse_profile(profile);
    cfg.seed = seed;
    const SampleResult r = sample_dhp(cfg);
    InstanceMetadata meta;
    meta.entries["generator"] = profile_name(cfg.profile);
    meta.entries["seed"] = std::to_string(seed);
    std::cerr << "accepted after " << r.attempts << " attempt(s)\n";
    std::cout << emit_instance(r.graph, meta);
    return 0;
}

int cmd_search(const SearchConfig& cfg) {
    const SearchReport rep = search_counterexamples(cfg);
    std::cout << format_search_report(rep, cfg);
    std::cerr << "elapsed " << rep.elapsed_seconds << "s\n";
    return rep.counterexamples.empty() ? 0 : 1;
}

int cmd_bounds(const Common& c) {
    const Instance inst = parse_instance(read_input(c.file));
    const DhpVerdict v = check_dhp(inst.graph);
    const LowerBoundReport r = check_lower_bound(inst.graph);
    char bound_str[64];
    std::snprintf(bound_str, sizeof bound_str, "%.6f", r.bound);
    std::cout << "dhp-report v1\ncommand bounds\n";
    std::cout << "a-count " << inst.graph.a_count() << "\nb-count " << inst.graph.b_count()
              << "\n";
    std::cout << "dhp " << (v.holds ? "true" : "false") << "\n";
    std::cout << "edge-count " << r.edge_count << "\n";
    std::cout << "lower-bound " << bound_str << "\n";
    std::cout << "holds " << (r.holds ? "true" : "false") << "\n";
    if (v.holds && !r.holds)
        throw contradiction_error("double Hall instance below the proven edge floor");
    if (!v.holds) return 1;
    return r.holds ? 0 : 1;
}

int cmd_export_dot(const Common& c, bool with_factor) {
    const Instance inst = parse_instance(read_input(c.file));
    if (with_factor) {
        const auto fam = find_covering_two_factor(inst.graph);
        std::cout << export_dot(inst.graph, fam ? &*fam : nullptr);
    } else {
        std::cout << export_dot(inst.graph);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double Hall property toolkit"};
    app.require_subcommand(1);

    Common common;
    int cap_check = 24, cap_cycle = 14;
    int k = 0, l = 1, n_override = 0;
    int gen_n = 4, sample_n = 4, sample_b = 4;
    bool gen_random = false, with_factor = false;
    std::uint64_t seed = 0;
    std::string profile = "uniform";
    SearchConfig search_cfg;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", common.file, "instance file ('-' for stdin)")->required();
    };

    auto* sc_check = app.add_subcommand("check-dhp", "decide the double Hall property");
    add_file(sc_check);
    sc_check->add_flag("--general", common.general, "treat input as a general graph");
    sc_check->add_option("--cap", cap_check, "vertex cap for the exhaustive scan");
    sc_check->add_flag("--unsafe-cap", common.unsafe_cap, "allow caps above the default");

    auto* sc_factor = app.add_subcommand("two-factor", "construct a covering 2-factor");
    add_file(sc_factor);
    sc_factor->add_flag("--general", common.general, "plain 2-factor of a general graph");
    sc_factor->add_option("--format", common.format, "text|dot")
        ->check(CLI::IsMember({"text", "dot"}));

    auto* sc_cycle = app.add_subcommand("find-cycle", "search for a covering rainbow cycle");
    add_file(sc_cycle);
    sc_cycle->add_option("--cap", cap_cycle, "vertex cap for the exact search");
    sc_cycle->add_flag("--unsafe-cap", common.unsafe_cap, "allow caps above the default");
    sc_cycle->add_option("--format", common.format, "text|dot")
        ->check(CLI::IsMember({"text", "dot"}));

    auto* sc_cover = app.add_subcommand("cover-deg2n",
                                        "covering cycle for B-degrees in {2, |A|}");
    add_file(sc_cover);
    sc_cover->add_option("--format", common.format, "text|dot")
        ->check(CLI::IsMember({"text", "dot"}));

    auto* sc_thin = app.add_subcommand("thin-colors", "balanced color thinning");
    add_file(sc_thin);

    auto* sc_rainbow = app.add_subcommand("rainbow-path", "guaranteed rainbow path");
    sc_rainbow->add_option("file", common.file, "optional instance file");
    sc_rainbow->add_option("--k", k, "span slack");
    sc_rainbow->add_option("--l", l, "path length");
    sc_rainbow->add_option("--n", n_override, "vertex count for the generated coloring");

    auto* sc_tree = app.add_subcommand("gen-tree", "binary-tree instance generator");
    sc_tree->add_option("--n", gen_n, "leaf count")->required();
    sc_tree->add_flag("--random", gen_random, "random tree shape instead of complete");
    sc_tree->add_option("--seed", seed, "random tree seed");

    auto* sc_sample = app.add_subcommand("sample", "rejection-sample an instance");
    sc_sample->add_option("--n", sample_n, "|A|")->required();
    sc_sample->add_option("--b", sample_b, "|B|")->required();
    sc_sample->add_option("--profile", profile, "uniform|two-n|tree")
        ->check(CLI::IsMember({"uniform", "two-n", "tree"}));
    sc_sample->add_option("--seed", seed, "sampler seed");

    bool sweep = false;
    auto* sc_search = app.add_subcommand("search", "conjecture counterexample harness");
    sc_search->add_option("--samples", search_cfg.samples, "instances to test");
    sc_search->add_option("--n", search_cfg.a_count, "|A|");
    sc_search->add_option("--b", search_cfg.b_count, "|B| (largest |B| with --sweep)");
    sc_search->add_flag("--sweep", sweep,
                        "exhaustive sweep over all canonical instances instead of sampling");
    sc_search->add_option("--profile", profile, "uniform|two-n|tree")
        ->check(CLI::IsMember({"uniform", "two-n", "tree"}));
    sc_search->add_option("--seed", search_cfg.seed, "base seed");
    sc_search->add_option("--workers", search_cfg.workers, "worker threads");
    sc_search->add_option("--cap", search_cfg.cycle_cap, "cycle search cap");

    auto* sc_bounds = app.add_subcommand("bounds", "edge-count floor report");
    add_file(sc_bounds);

    auto* sc_dot = app.add_subcommand("export-dot", "Graphviz export");
    add_file(sc_dot);
    sc_dot->add_flag("--factor", with_factor, "highlight a covering 2-factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_check->parsed()) return cmd_check_dhp(common, cap_check);
        if (sc_factor->parsed()) return cmd_two_factor(common);
        if (sc_cycle->parsed()) return cmd_find_cycle(common, cap_cycle);
        if (sc_cover->parsed()) return cmd_cover_deg2n(common);
        if (sc_thin->parsed()) return cmd_thin_colors(common);
        if (sc_rainbow->parsed()) return cmd_rainbow_path(common.file, k, l, n_override);
        if (sc_tree->parsed()) return cmd_gen_tree(gen_n, gen_random, seed);
        if (sc_sample->parsed()) {
            if (sample_b < sample_n) {
                std::cerr << "usage error: --b must be at least --n "
                             "(the property at X = A forces |B| >= |A|)\n";
                return 2;
            }
            return cmd_sample(sample_n, sample_b, profile, seed);
        }
        if (sc_search->parsed()) {
            search_cfg.mode = sweep ? SearchMode::sweep : SearchMode::sample;
            search_cfg.profile = parse_profile(profile);
            return cmd_search(search_cfg);
        }
        if (sc_bounds->parsed()) return cmd_bounds(common);
        if (sc_dot->parsed()) return cmd_export_dot(common, with_factor);
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const size_cap_error& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const contradiction_error& e) {
        std::cerr << "CONTRADICTION: " << e.what() << "\n";
        std::cerr << "a proved guarantee failed; please report this instance\n";
        return 4;
    } catch (const precondition_error& e) {
        std::cerr << "precondition not met: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
