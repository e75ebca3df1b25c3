#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/cycle_family.hpp"
#include "dhp/errors.hpp"
#include "dhp/graph.hpp"
#include "dhp/matching.hpp"
#include "dhp/parity_factor.hpp"

namespace dhp {

namespace detail {

// Walk a subgraph in which every touched vertex has degree exactly 2 and
// split it into cycles. Starts at the lowest unvisited vertex, leaves via
// its lower-id neighbor.
inline CycleFamily extract_cycles(int vertex_count,
                                  const std::vector<std::vector<int>>& factor_adj) {
    CycleFamily fam;
    std::vector<char> visited(vertex_count, 0);
    for (int v0 = 0; v0 < vertex_count; ++v0) {
        if (visited[v0] || factor_adj[v0].empty()) continue;
        std::vector<int> cycle;
        int prev = -1, cur = v0;
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            const auto& nb = factor_adj[cur];
            if (nb.size() != 2)
                throw contradiction_error("factor vertex without degree 2 during extraction");
            int next = (nb[0] != prev) ? nb[0] : nb[1];
            // at the start both neighbors qualify; take the smaller
            if (prev < 0) next = std::min(nb[0], nb[1]);
            prev = cur;
            cur = next;
        } while (cur != v0);
        fam.cycles.push_back(std::move(cycle));
    }
    return fam;
}

// Degree-2 subgraph with optional opt-out, by reduction to perfect
// matching. Every vertex v becomes d(v) external nodes (one per incident
// edge) joined completely to two internal nodes; an original edge is IN
// the subgraph iff both of its externals are matched inward. Vertices with
// slack get one extra edge between their internals, letting them take
// degree 0 instead of 2.
inline std::optional<std::vector<char>> degree_two_subgraph(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<char>& slack) {
    const int m = (int)edges.size();
    const int internal_base = 2 * m;
    const int total = 2 * m + 2 * vertex_count;
    std::vector<std::vector<int>> adj(total);
    auto internal0 = [&](int v) { return internal_base + 2 * v; };
    auto connect = [&](int x, int y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };
    for (int i = 0; i < m; ++i) {
        auto [u, v] = edges[i];
        connect(2 * i, internal0(u));
        connect(2 * i, internal0(u) + 1);
        connect(2 * i + 1, internal0(v));
        connect(2 * i + 1, internal0(v) + 1);
        connect(2 * i, 2 * i + 1);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (slack[v]) connect(internal0(v), internal0(v) + 1);

    BlossomMatcher matcher(std::move(adj));
    if (2 * matcher.solve() != total) return std::nullopt;
    const std::vector<int>& mate = matcher.mate();

    std::vector<char> in_factor(m, 0);
    std::vector<int> deg(vertex_count, 0);
    for (int i = 0; i < m; ++i) {
        if (mate[2 * i] == 2 * i + 1) continue;
        if (mate[2 * i] < internal_base || mate[2 * i + 1] < internal_base)
            throw contradiction_error("gadget matching left an external half-attached");
        in_factor[i] = 1;
        ++deg[edges[i].first];
        ++deg[edges[i].second];
    }
    for (int v = 0; v < vertex_count; ++v) {
        const bool ok = deg[v] == 2 || (slack[v] && deg[v] == 0);
        if (!ok)
            throw contradiction_error("gadget matching reconstructed an invalid degree");
    }
    return in_factor;
}

inline CycleFamily cycles_from_edge_flags(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<char>& flags) {
    std::vector<std::vector<int>> fadj(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!flags[i]) continue;
        fadj[edges[i].first].push_back(edges[i].second);
        fadj[edges[i].second].push_back(edges[i].first);
    }
    return extract_cycles(vertex_count, fadj);
}

} // namespace detail

// 2-factor covering A: subgraph with degree 2 at every A-vertex and degree
// 0 or 2 at every B-vertex, as disjoint cycles in combined ids (A first).
inline std::optional<CycleFamily> find_covering_two_factor(const BipartiteGraph& g) {
    if (g.a_count() < 2)
        throw precondition_error("covering 2-factor needs |A| >= 2");
    const int n = g.a_count();
    const int total = n + g.b_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(a, n + b);
    std::vector<char> slack(total, 0);
    for (int b = 0; b < g.b_count(); ++b) slack[n + b] = 1;
    auto flags = detail::degree_two_subgraph(total, edges, slack);
    if (!flags) return std::nullopt;
    return detail::cycles_from_edge_flags(total, edges, *flags);
}

// 2-factor of a general graph: disjoint cycles covering every vertex.
inline std::optional<CycleFamily> find_general_two_factor(const Graph& g) {
    if (g.vertex_count() < 2)
        throw precondition_error("2-factor needs >= 2 vertices");
    std::vector<char> slack(g.vertex_count(), 0);
    auto flags = detail::degree_two_subgraph(g.vertex_count(), g.edges(), slack);
    if (!flags) return std::nullopt;
    return detail::cycles_from_edge_flags(g.vertex_count(), g.edges(), *flags);
}

// Ground-truth oracle: backtracking over the edge list with degree-window
// pruning. Exact and independent of the matching route; keep it that way.
inline std::optional<CycleFamily> find_two_factor_exhaustive(const Graph& host,
                                                             const ParityFactorSpec& spec,
                                                             int edge_cap = 40) {
    const int m = host.edge_count();
    if (m > edge_cap)
        throw size_cap_error("exhaustive two-factor oracle capped at " +
                             std::to_string(edge_cap) + " edges");
    const auto& edges = host.edges();
    const int nv = host.vertex_count();
    std::vector<int> deg(nv, 0), rem(nv, 0);
    for (auto [u, v] : edges) {
        ++rem[u];
        ++rem[v];
    }
    std::vector<char> flags(m, 0);
    std::optional<std::vector<char>> found;

    auto feasible = [&](int v) {
        if (deg[v] > spec.f[v]) return false;
        if (deg[v] + rem[v] < spec.g[v]) return false;
        if (rem[v] == 0 && ((deg[v] - spec.f[v]) & 1)) return false;
        if (rem[v] == 0 && deg[v] < spec.g[v]) return false;
        return true;
    };

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) {
            for (int v = 0; v < nv; ++v)
                if (deg[v] < spec.g[v] || deg[v] > spec.f[v] || ((deg[v] - spec.f[v]) & 1))
                    return false;
            found = flags;
            return true;
        }
        auto [u, v] = edges[i];
        --rem[u];
        --rem[v];
        // include first: factors surface quickly on feasible instances
        ++deg[u];
        ++deg[v];
        flags[i] = 1;
        if (feasible(u) && feasible(v) && rec(i + 1)) return true;
        --deg[u];
        --deg[v];
        flags[i] = 0;
        if (feasible(u) && feasible(v) && rec(i + 1)) return true;
        ++rem[u];
        ++rem[v];
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return detail::cycles_from_edge_flags(nv, edges, *found);
}

inline std::optional<CycleFamily> find_covering_two_factor_exhaustive(const BipartiteGraph& g,
                                                                      int edge_cap = 40) {
    return find_two_factor_exhaustive(to_host_graph(g), covering_spec(g), edge_cap);
}

} // namespace dhp
