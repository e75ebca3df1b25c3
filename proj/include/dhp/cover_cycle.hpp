#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/cycle_family.hpp"
#include "dhp/dhp_check.hpp"
#include "dhp/errors.hpp"
#include "dhp/path_partition.hpp"
#include "dhp/rainbow_cycle.hpp"

namespace dhp {

struct CoverCycleResult {
    CycleFamily family;   // one covering cycle, combined ids (A then B)
    RainbowCycle rainbow; // the same cycle in the colored-multigraph view
    int path_count = 0;   // parts in the small-color path partition
    int large_color_count = 0;
};

namespace detail {

inline CycleFamily rainbow_to_bipartite_cycle(const BipartiteGraph& g,
                                              const ColoredMultigraph& m,
                                              const RainbowCycle& rc) {
    CycleFamily fam;
    std::vector<int> cyc;
    for (std::size_t i = 0; i < rc.vertices.size(); ++i) {
        cyc.push_back(rc.vertices[i]);
        cyc.push_back(g.a_count() + m.color_source[rc.colors[i]]);
    }
    fam.cycles.push_back(std::move(cyc));
    return fam;
}

} // namespace detail

// Single cycle through all of A when every B-degree is 2 or |A|. Size-2
// color cliques form a graph H on A whose independent sets are covered by
// full-size colors, so H splits into at most (#full colors) paths; one edge
// of a distinct full color closes each gap. In the degenerate all-small
// case H is complete and the gap pairs still own private small colors.
inline CoverCycleResult cover_cycle_deg_2n(const BipartiteGraph& g) {
    const int n = g.a_count();
    if (n < 2) throw precondition_error("need |A| >= 2");
    for (int b = 0; b < g.b_count(); ++b) {
        const int d = g.degree_b(b);
        if (d != 2 && d != n)
            throw precondition_error("B-vertex " + std::to_string(b) +
                                     " has degree " + std::to_string(d) +
                                     ", expected 2 or " + std::to_string(n));
    }
    const DhpVerdict verdict = check_dhp(g);
    if (!verdict.holds)
        throw precondition_error("input fails the double Hall property");

    const ColoredMultigraph m = to_colored_multigraph(g);

    CoverCycleResult out;
    if (n == 2) {
        const auto cs = m.colors_on(0, 1);
        out.rainbow = RainbowCycle{{0, 1}, {cs[0], cs[1]}};
        out.path_count = 1;
        for (int c = 0; c < m.color_count(); ++c)
            if (popcount(m.cliques[c]) == n) ++out.large_color_count;
        out.family = detail::rainbow_to_bipartite_cycle(g, m, out.rainbow);
        return out;
    }

    std::vector<int> large;
    std::vector<std::pair<int, int>> small_edges;
    std::vector<int> small_color_of_edge;
    for (int c = 0; c < m.color_count(); ++c) {
        if (popcount(m.cliques[c]) == n) {
            large.push_back(c);
        } else {
            const auto uv = bits_of(m.cliques[c]);
            small_edges.emplace_back(uv[0], uv[1]);
            small_color_of_edge.push_back(c);
        }
    }
    out.large_color_count = (int)large.size();

    // H: the union of the small cliques (deduplicated)
    std::vector<std::pair<int, int>> h_edges = small_edges;
    std::sort(h_edges.begin(), h_edges.end());
    h_edges.erase(std::unique(h_edges.begin(), h_edges.end()), h_edges.end());
    const Graph h(n, h_edges);

    const int budget = std::max(out.large_color_count, 1);
    PathPartition pp = path_partition_gallai_milgram(h, budget);
    out.path_count = (int)pp.paths.size();

    // normalize and order the parts for a reproducible cycle
    for (auto& p : pp.paths)
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    std::sort(pp.paths.begin(), pp.paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<char> color_used(m.color_count(), 0);
    auto smallest_small_on = [&](int u, int v) {
        for (std::size_t i = 0; i < small_edges.size(); ++i) {
            auto [x, y] = small_edges[i];
            const int c = small_color_of_edge[i];
            if (((x == u && y == v) || (x == v && y == u)) && !color_used[c]) return c;
        }
        return -1;
    };

    RainbowCycle rc;
    for (const auto& p : pp.paths) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            rc.vertices.push_back(p[i]);
            if (i + 1 < p.size()) {
                const int c = smallest_small_on(p[i], p[i + 1]);
                if (c < 0)
                    throw contradiction_error("path edge lost its small color");
                color_used[c] = 1;
                rc.colors.push_back(c);
            }
        }
        rc.colors.push_back(-1); // connector placeholder after each part
    }
    // fill connectors: prefer an unused full-size color, else a private
    // small color of the junction pair
    std::size_t next_large = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < rc.colors.size(); ++i) {
        // advance pos to the vertex index this color leaves from
        if (rc.colors[i] >= 0) {
            ++pos;
            continue;
        }
        const int u = rc.vertices[pos];
        const int v = rc.vertices[(pos + 1) % rc.vertices.size()];
        int c = -1;
        while (next_large < large.size() && color_used[large[next_large]]) ++next_large;
        if (next_large < large.size()) {
            c = large[next_large++];
        } else {
            c = smallest_small_on(u, v);
        }
        if (c < 0 || !m.pair_has_color(u, v, c))
            throw contradiction_error("no connector color available for a junction");
        color_used[c] = 1;
        rc.colors[i] = c;
        ++pos;
    }

    out.rainbow = rc;
    out.family = detail::rainbow_to_bipartite_cycle(g, m, rc);
    return out;
}

} // namespace dhp
