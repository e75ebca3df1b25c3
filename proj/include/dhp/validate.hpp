#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/cycle_family.hpp"
#include "dhp/graph.hpp"
#include "dhp/path_partition.hpp"
#include "dhp/rainbow_cycle.hpp"
#include "dhp/rainbow_path.hpp"

namespace dhp {

// Validators return an empty string on success and a diagnostic otherwise.
// They are deliberately naive re-derivations, used to double-check the
// constructive routines.

namespace detail {

inline bool host_has_edge(const BipartiteGraph& g, int x, int y) {
    const int n = g.a_count();
    if (x < n && y >= n) return g.has_edge(x, y - n);
    if (y < n && x >= n) return g.has_edge(y, x - n);
    return false;
}

} // namespace detail

inline std::string validate_covering_two_factor(const BipartiteGraph& g,
                                                const CycleFamily& fam) {
    const int n = g.a_count();
    const int total = n + g.b_count();
    std::vector<int> deg(total, 0);
    for (const auto& cyc : fam.cycles) {
        if (cyc.size() < 4 || cyc.size() % 2 != 0)
            return "bipartite cycle of length " + std::to_string(cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
            if (x < 0 || x >= total) return "vertex out of range";
            if (!detail::host_has_edge(g, x, y))
                return "missing edge " + std::to_string(x) + "-" + std::to_string(y);
            ++deg[x];
            ++deg[y];
        }
    }
    // a vertex revisited anywhere would exceed degree 2
    for (int a = 0; a < n; ++a)
        if (deg[a] != 2) return "A-vertex " + std::to_string(a) + " has factor degree " +
                                std::to_string(deg[a]);
    for (int b = n; b < total; ++b)
        if (deg[b] != 0 && deg[b] != 2)
            return "B-vertex " + std::to_string(b - n) + " has factor degree " +
                   std::to_string(deg[b]);
    return "";
}

inline std::string validate_general_two_factor(const Graph& g, const CycleFamily& fam) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& cyc : fam.cycles) {
        if (cyc.size() < 3) return "cycle of length " + std::to_string(cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
            if (x < 0 || x >= g.vertex_count()) return "vertex out of range";
            if (!g.has_edge(x, y))
                return "missing edge " + std::to_string(x) + "-" + std::to_string(y);
            ++deg[x];
            ++deg[y];
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 2) return "vertex " + std::to_string(v) + " has factor degree " +
                                std::to_string(deg[v]);
    return "";
}

inline std::string validate_rainbow_hamiltonian_cycle(const ColoredMultigraph& m,
                                                      const RainbowCycle& rc) {
    const int n = m.vertex_count;
    if ((int)rc.vertices.size() != n) return "cycle does not visit every vertex";
    if (rc.colors.size() != rc.vertices.size()) return "color count mismatch";
    std::set<int> vs(rc.vertices.begin(), rc.vertices.end());
    if ((int)vs.size() != n) return "repeated vertex";
    std::set<int> cs(rc.colors.begin(), rc.colors.end());
    if (cs.size() != rc.colors.size()) return "repeated color";
    for (std::size_t i = 0; i < rc.vertices.size(); ++i) {
        const int u = rc.vertices[i], v = rc.vertices[(i + 1) % rc.vertices.size()];
        const int c = rc.colors[i];
        if (c < 0 || c >= m.color_count()) return "color id out of range";
        if (!m.pair_has_color(u, v, c))
            return "color " + std::to_string(c) + " not on pair " + std::to_string(u) +
                   "-" + std::to_string(v);
    }
    return "";
}

// A single cycle visiting every A-vertex exactly once and B-vertices at
// most once, alternating sides, with every step an edge of g.
inline std::string validate_covering_cycle(const BipartiteGraph& g, const CycleFamily& fam) {
    if (fam.cycles.size() != 1) return "expected exactly one cycle";
    const auto& cyc = fam.cycles.front();
    const int n = g.a_count();
    std::set<int> a_seen, b_seen;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
        if (!detail::host_has_edge(g, x, y))
            return "missing edge " + std::to_string(x) + "-" + std::to_string(y);
        if (x < n) {
            if (!a_seen.insert(x).second) return "A-vertex repeated";
        } else if (!b_seen.insert(x).second) {
            return "B-vertex repeated";
        }
    }
    if ((int)a_seen.size() != n) return "cycle misses part of A";
    return "";
}

inline std::string validate_path_partition(const Graph& g, const PathPartition& pp) {
    std::set<int> seen;
    for (const auto& p : pp.paths) {
        if (p.empty()) return "empty path";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!seen.insert(p[i]).second) return "vertex repeated across paths";
            if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1]))
                return "non-adjacent consecutive pair";
        }
    }
    if ((int)seen.size() != g.vertex_count()) return "vertices left uncovered";
    return "";
}

inline std::string validate_rainbow_path(const EdgeColoredGraph& g, const RainbowPath& p,
                                         int l) {
    if ((int)p.colors.size() != l) return "wrong length";
    if (p.vertices.size() != p.colors.size() + 1) return "vertex/color count mismatch";
    std::set<int> vs(p.vertices.begin(), p.vertices.end());
    if (vs.size() != p.vertices.size()) return "repeated vertex";
    std::set<int> cs(p.colors.begin(), p.colors.end());
    if (cs.size() != p.colors.size()) return "repeated color";
    for (std::size_t i = 0; i < p.colors.size(); ++i) {
        const auto& lst = g.colors[p.vertices[i]][p.vertices[i + 1]];
        if (std::count(lst.begin(), lst.end(), p.colors[i]) == 0)
            return "color not available on its edge";
    }
    return "";
}

} // namespace dhp
