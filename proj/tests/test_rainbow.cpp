#include <catch2/catch_amalgamated.hpp>

#include "dhp/cover_cycle.hpp"
#include "dhp/dhp_check.hpp"
#include "dhp/orientation.hpp"
#include "dhp/path_partition.hpp"
#include "dhp/rainbow_cycle.hpp"
#include "dhp/rainbow_path.hpp"
#include "dhp/sampling.hpp"
#include "dhp/thinning.hpp"
#include "dhp/validate.hpp"
#include "test_helpers.hpp"

using namespace dhp;

namespace {

ColoredMultigraph doubled_complete(int n) {
    ColoredMultigraph m;
    m.vertex_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            m.cliques.push_back(bit(u) | bit(v));
            m.cliques.push_back(bit(u) | bit(v));
        }
    m.color_source.resize(m.cliques.size());
    for (std::size_t i = 0; i < m.color_source.size(); ++i) m.color_source[i] = (int)i;
    return m;
}

Multigraph random_multigraph(SplitMix64& rng, int n, int m) {
    Multigraph h;
    h.vertex_count = n;
    for (int i = 0; i < m; ++i) {
        const int u = (int)rng.below(n);
        int v = (int)rng.below(n - 1);
        if (v >= u) ++v;
        h.edges.push_back({u, v});
    }
    return h;
}

} // namespace

TEST_CASE("balanced orientation basics") {
    Multigraph c4;
    c4.vertex_count = 4;
    c4.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const Orientation o = balanced_orientation(c4);
    CHECK(o.max_imbalance() == 0);

    Multigraph single;
    single.vertex_count = 2;
    single.edges = {{0, 1}};
    const Orientation o2 = balanced_orientation(single);
    CHECK(o2.max_imbalance() == 1);

    Multigraph loop;
    loop.vertex_count = 1;
    loop.edges = {{0, 0}};
    CHECK_THROWS_AS(balanced_orientation(loop), precondition_error);
}

TEST_CASE("balanced orientation on random multigraphs") {
    SplitMix64 rng(17);
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + (int)rng.below(7);
        const Multigraph h = random_multigraph(rng, n, (int)rng.below(20));
        const Orientation o = balanced_orientation(h);
        CHECK(o.max_imbalance() <= 1);
        long long out = 0, in = 0;
        for (int v = 0; v < n; ++v) {
            out += o.out_degree[v];
            in += o.in_degree[v];
        }
        CHECK(out == (long long)h.edges.size());
        CHECK(in == (long long)h.edges.size());
    }
}

TEST_CASE("thinning bounds follow the clique sizes") {
    // all cliques of size 2: the bound is 1, i.e. a rainbow selection
    const ColoredMultigraph small = doubled_complete(4);
    const ThinnedColoring tc = thin_colors(small);
    CHECK(tc.delta == 2);
    CHECK(tc.usage_bound == 1);
    CHECK(tc.max_usage() <= 1);

    // delta = 3 gives ceil(3/2) = 2
    ColoredMultigraph mid = doubled_complete(3);
    mid.cliques.push_back(low_mask(3));
    mid.color_source.push_back((int)mid.cliques.size() - 1);
    CHECK(thin_colors(mid).usage_bound == 2);

    // the 4-leaf tree instance has delta = 4, bound 3
    const ThinnedColoring tree = thin_colors(to_colored_multigraph(t::tree4_by_hand()));
    CHECK(tree.delta == 4);
    CHECK(tree.usage_bound == 3);
    CHECK(tree.max_usage() <= 3);
}

TEST_CASE("thinning needs two colors per pair") {
    ColoredMultigraph m;
    m.vertex_count = 3;
    m.cliques = {low_mask(3)};
    m.color_source = {0};
    CHECK_THROWS_AS(thin_colors(m), precondition_error);
}

TEST_CASE("thinning on sampled double Hall instances") {
    SplitMix64 rng(345);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + (int)rng.below(9);
        SampleConfig cfg{n, n + (int)rng.below(3), DegreeProfile::uniform, rng.next()};
        const BipartiteGraph g = sample_dhp(cfg).graph;
        const ColoredMultigraph m = to_colored_multigraph(strip_degree_le1(g));
        const ThinnedColoring tc = thin_colors(m);
        CHECK(tc.max_usage() <= tc.usage_bound);
        for (int u = 0; u < m.vertex_count; ++u)
            for (int v = u + 1; v < m.vertex_count; ++v)
                CHECK(m.pair_has_color(u, v, tc.chosen_for(u, v)));
        CHECK(balanced_orientation(thinning_aux_multigraph(m)).max_imbalance() <= 1);
    }
}

TEST_CASE("afr arithmetic check") {
    CHECK(afr_arithmetic_ok(2, 65));
    CHECK_FALSE(afr_arithmetic_ok(2, 64)); // ceiling boundary
    for (int delta = 3; delta <= 60; ++delta)
        CHECK(afr_arithmetic_ok(delta, 16LL * delta * delta));
    CHECK(afr_arithmetic_ok(250, 1000000));
}

TEST_CASE("rainbow cycle on the 2-vertex instance") {
    const RainbowCycleSearch r = find_rainbow_hamiltonian_cycle(to_colored_multigraph(t::c4()));
    REQUIRE(r.cycle.has_value());
    CHECK(r.cycle->vertices == std::vector<int>{0, 1});
    CHECK(r.cycle->colors == std::vector<int>{0, 1});
}

TEST_CASE("rainbow cycle on the 4-leaf tree instance") {
    const ColoredMultigraph m = to_colored_multigraph(t::tree4_by_hand());
    const RainbowCycleSearch r = find_rainbow_hamiltonian_cycle(m);
    REQUIRE(r.cycle.has_value());
    CHECK(validate_rainbow_hamiltonian_cycle(m, *r.cycle).empty());
}

TEST_CASE("one color cannot paint a triangle") {
    ColoredMultigraph m;
    m.vertex_count = 3;
    m.cliques = {low_mask(3)};
    m.color_source = {0};
    const RainbowCycleSearch r = find_rainbow_hamiltonian_cycle(m);
    CHECK_FALSE(r.cycle.has_value());
    CHECK(r.exhaustive);
    CHECK_FALSE(find_rainbow_cycle_by_permutations(m).has_value());
}

TEST_CASE("backtracker agrees with the permutation oracle") {
    SplitMix64 rng(31415);
    for (int round = 0; round < 120; ++round) {
        // arbitrary colored multigraphs, mostly not double Hall
        const int n = 2 + (int)rng.below(5);
        ColoredMultigraph m;
        m.vertex_count = n;
        const int colors = 1 + (int)rng.below(7);
        for (int c = 0; c < colors; ++c) {
            mask_t cl = rng.next() & low_mask(n);
            if (popcount(cl) < 2) cl = low_mask(n) & (bit(rng.below(n)) | bit(0) | bit(1));
            m.cliques.push_back(cl);
            m.color_source.push_back(c);
        }
        const RainbowCycleSearch bt = find_rainbow_hamiltonian_cycle(m);
        const auto oracle = find_rainbow_cycle_by_permutations(m);
        CHECK(bt.cycle.has_value() == oracle.has_value());
        if (bt.cycle) CHECK(validate_rainbow_hamiltonian_cycle(m, *bt.cycle).empty());
        if (!bt.cycle) CHECK(bt.exhaustive);
    }
}

TEST_CASE("cycle search cap") {
    CHECK_THROWS_AS(
        find_rainbow_hamiltonian_cycle(doubled_complete(15), 14), size_cap_error);
}

TEST_CASE("independence number basics") {
    CHECK(independence_number(Graph(5, {})) == 5);
    CHECK(independence_number(t::complete_graph(5)) == 1);
    CHECK(independence_number(t::cycle_graph(5)) == 2);
}

TEST_CASE("path partitions") {
    const Graph empty(4, {});
    const PathPartition singletons = path_partition_gallai_milgram(empty, 4);
    CHECK(singletons.paths.size() == 4);
    CHECK(validate_path_partition(empty, singletons).empty());

    const Graph p5 = t::path_graph(5);
    const PathPartition one = path_partition_gallai_milgram(p5, 1);
    CHECK(one.paths.size() == 1);
    CHECK(validate_path_partition(p5, one).empty());

    const Graph c5 = t::cycle_graph(5);
    const PathPartition two = path_partition_gallai_milgram(c5, 2);
    CHECK(two.paths.size() <= 2);
    CHECK(validate_path_partition(c5, two).empty());
}

TEST_CASE("partition count never exceeds the independence number") {
    SplitMix64 rng(555);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + (int)rng.below(9);
        const Graph g = t::random_graph(rng, n, 45);
        const int alpha = independence_number(g);
        const PathPartition pp = path_partition_gallai_milgram(g, n);
        CHECK((int)pp.paths.size() <= alpha);
        CHECK(validate_path_partition(g, pp).empty());
    }
}

TEST_CASE("covering cycle with degrees in {2, n}: worked instances") {
    // C4: both B-degrees equal 2 = |A|
    const CoverCycleResult r1 = cover_cycle_deg_2n(t::c4());
    CHECK(validate_covering_cycle(t::c4(), r1.family).empty());

    // one full vertex over a triangle of small colors
    const BipartiteGraph g2 = from_edge_list(
        3, 4, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {0, 3}, {2, 3}});
    REQUIRE(check_dhp(g2).holds);
    const CoverCycleResult r2 = cover_cycle_deg_2n(g2);
    CHECK(validate_covering_cycle(g2, r2.family).empty());
    CHECK(r2.large_color_count == 1);
    CHECK(r2.path_count <= 1);

    // two full vertices plus two disjoint small edges on four A-vertices
    const BipartiteGraph g3 = from_edge_list(
        4, 4,
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 3}});
    REQUIRE(check_dhp(g3).holds);
    const CoverCycleResult r3 = cover_cycle_deg_2n(g3);
    CHECK(validate_covering_cycle(g3, r3.family).empty());
    CHECK(r3.large_color_count == 2);
    CHECK(r3.path_count <= 2);
}

TEST_CASE("covering cycle survives the all-small corner") {
    // every pair doubled: no full-size colors at all, H is complete
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
            for (int copy = 0; copy < 2; ++copy) {
                edges.push_back({u, b});
                edges.push_back({v, b});
                ++b;
            }
    const BipartiteGraph g = from_edge_list(3, b, edges);
    REQUIRE(check_dhp(g).holds);
    const CoverCycleResult r = cover_cycle_deg_2n(g);
    CHECK(r.large_color_count == 0);
    CHECK(validate_covering_cycle(g, r.family).empty());
}

TEST_CASE("covering cycle preconditions") {
    CHECK_THROWS_AS(cover_cycle_deg_2n(t::star31()), precondition_error);
    // degree 3 with |A| = 4 is neither 2 nor |A|
    const BipartiteGraph bad =
        from_edge_list(4, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
    CHECK_THROWS_AS(cover_cycle_deg_2n(bad), precondition_error);
}

TEST_CASE("double factorial bound values") {
    CHECK(double_factorial_bound(0, 0) == 1);
    CHECK(double_factorial_bound(3, 1) == 4);
    CHECK(double_factorial_bound(0, 1) == 1);
    CHECK(double_factorial_bound(1, 2) == 9);
    CHECK(double_factorial_bound(0, 2) == 6);
    CHECK(double_factorial_bound(0, 3) == 45);
}

TEST_CASE("rainbow paths at small lengths") {
    // length 0: a single vertex
    EdgeColoredGraph g1(1);
    const auto p0 = find_rainbow_path(g1, 0, 0);
    REQUIRE(p0.has_value());
    CHECK(p0->vertices.size() == 1);

    // length 1 from a doubled edge
    EdgeColoredGraph g2(2);
    g2.add_edge_color(0, 1, 0);
    g2.add_edge_color(0, 1, 1);
    const auto p1 = find_rainbow_path(g2, 0, 1);
    REQUIRE(p1.has_value());
    CHECK(validate_rainbow_path(g2, *p1, 1).empty());

    // length 2 on the doubled complete graph on n0(0,2) = 6 vertices
    const EdgeColoredGraph g3 = to_edge_colored(doubled_complete(6));
    const auto p2 = find_rainbow_path(g3, 0, 2);
    REQUIRE(p2.has_value());
    CHECK(validate_rainbow_path(g3, *p2, 2).empty());
}

TEST_CASE("rainbow path through a color-poor vertex") {
    // vertices 0..7 pairwise doubled; vertex 8 joined to all by one color
    EdgeColoredGraph g(9);
    int c = 0;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            g.add_edge_color(u, v, c++);
            g.add_edge_color(u, v, c++);
        }
    const int red = c;
    for (int u = 0; u < 8; ++u) g.add_edge_color(u, 8, red);
    REQUIRE(span_condition_holds(g, 1));
    const auto p = find_rainbow_path(g, 1, 2);
    REQUIRE(p.has_value());
    CHECK(validate_rainbow_path(g, *p, 2).empty());
}

TEST_CASE("span condition witnesses") {
    EdgeColoredGraph g(3);
    g.add_edge_color(0, 1, 0);
    g.add_edge_color(0, 2, 0);
    g.add_edge_color(1, 2, 0);
    std::vector<int> witness;
    CHECK_FALSE(span_condition_holds(g, 0, &witness));
    CHECK(witness.size() >= 2);
    CHECK(span_condition_holds(g, 2));
    CHECK_THROWS_AS(find_rainbow_path(g, 0, 1), precondition_error);
}
