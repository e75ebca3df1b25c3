#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "dhp/errors.hpp"
#include "dhp/graph.hpp"

namespace dhp {

struct Orientation {
    std::vector<char> from_first; // edge i runs first -> second?
    std::vector<int> out_degree;
    std::vector<int> in_degree;

    std::pair<int, int> arc(const Multigraph& h, int i) const {
        auto [u, v] = h.edges[i];
        return from_first[i] ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    int max_imbalance() const {
        int worst = 0;
        for (std::size_t v = 0; v < out_degree.size(); ++v)
            worst = std::max(worst, std::abs(out_degree[v] - in_degree[v]));
        return worst;
    }
};

// Orient every edge so that |d+(v) - d-(v)| <= 1 at every vertex. Join an
// auxiliary vertex once to each odd-degree vertex; every component is then
// Eulerian, and orienting along closed trails balances every vertex
// exactly. Dropping the auxiliary arcs costs each odd vertex one unit.
inline Orientation balanced_orientation(const Multigraph& h) {
    const int n = h.vertex_count;
    const int m = (int)h.edges.size();
    for (auto [u, v] : h.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("loops cannot be oriented");
    }

    std::vector<int> deg(n, 0);
    for (auto [u, v] : h.edges) {
        ++deg[u];
        ++deg[v];
    }
    const int aux = n;
    std::vector<std::pair<int, int>> aug = h.edges;
    for (int v = 0; v < n; ++v)
        if (deg[v] & 1) aug.emplace_back(v, aux);

    std::vector<std::vector<std::pair<int, int>>> adj(n + 1); // (edge id, other end)
    for (int i = 0; i < (int)aug.size(); ++i) {
        adj[aug[i].first].emplace_back(i, aug[i].second);
        adj[aug[i].second].emplace_back(i, aug[i].first);
    }

    Orientation o;
    o.from_first.assign(m, 0);
    o.out_degree.assign(n, 0);
    o.in_degree.assign(n, 0);
    std::vector<char> used(aug.size(), 0);
    std::vector<std::size_t> iter(n + 1, 0);

    auto orient = [&](int edge_id, int from) {
        if (edge_id >= m) return; // auxiliary arc, dropped
        const bool ff = aug[edge_id].first == from;
        o.from_first[edge_id] = ff;
        const int to = ff ? aug[edge_id].second : aug[edge_id].first;
        ++o.out_degree[from];
        ++o.in_degree[to];
    };

    // All degrees are even after augmentation, so a greedy walk from v0 can
    // only get stuck back at v0; each closed walk is balanced on its own.
    for (int v0 = 0; v0 <= n; ++v0) {
        while (true) {
            while (iter[v0] < adj[v0].size() && used[adj[v0][iter[v0]].first]) ++iter[v0];
            if (iter[v0] == adj[v0].size()) break;
            int v = v0;
            do {
                while (iter[v] < adj[v].size() && used[adj[v][iter[v]].first]) ++iter[v];
                auto [eid, to] = adj[v][iter[v]];
                used[eid] = 1;
                orient(eid, v);
                v = to;
            } while (v != v0);
        }
    }
    return o;
}

} // namespace dhp
