#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "dhp/bits.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/errors.hpp"

namespace dhp {

// Hamiltonian cycle of the colored multigraph with one color per edge, all
// distinct. colors[i] belongs to the pair (vertices[i], vertices[i+1 mod n]).
// For n == 2 the two "parallel" traversals of the single pair carry two
// distinct colors; in the bipartite picture that is the 4-cycle through two
// common neighbors.
struct RainbowCycle {
    std::vector<int> vertices;
    std::vector<int> colors;
};

struct RainbowCycleSearch {
    std::optional<RainbowCycle> cycle;
    std::uint64_t nodes_expanded = 0;
    bool exhaustive = false; // meaningful when no cycle was found
};

namespace detail {

struct CycleBacktracker {
    const ColoredMultigraph& m;
    int n;
    std::vector<std::vector<std::vector<int>>> pair_colors;
    std::vector<int> path;
    std::vector<char> color_used;
    mask_t on_path = 0;
    std::uint64_t nodes = 0;

    explicit CycleBacktracker(const ColoredMultigraph& mg) : m(mg), n(mg.vertex_count) {
        pair_colors.assign(n, std::vector<std::vector<int>>(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pair_colors[u][v] = pair_colors[v][u] = m.colors_on(u, v);
        color_used.assign(m.color_count(), 0);
        path.reserve(n);
    }

    int unused_colors_on(int u, int v) const {
        int k = 0;
        for (int c : pair_colors[u][v])
            if (!color_used[c]) ++k;
        return k;
    }

    bool extend(std::vector<int>& out_colors) {
        ++nodes;
        const int cur = path.back();
        if ((int)path.size() == n) {
            // close the cycle; reflections are cut by requiring the second
            // vertex to be below the last
            if (path[1] > path[n - 1]) return false;
            for (int c : pair_colors[cur][path[0]]) {
                if (color_used[c]) continue;
                out_colors.push_back(c);
                return true;
            }
            return false;
        }
        // fail-first: try successors with the fewest usable colors first
        std::vector<std::pair<int, int>> cand;
        for (int w = 0; w < n; ++w) {
            if (has_bit(on_path, w)) continue;
            const int avail = unused_colors_on(cur, w);
            if (avail > 0) cand.emplace_back(avail, w);
        }
        std::sort(cand.begin(), cand.end());
        for (auto [avail, w] : cand) {
            for (int c : pair_colors[cur][w]) {
                if (color_used[c]) continue;
                color_used[c] = 1;
                on_path |= bit(w);
                path.push_back(w);
                out_colors.push_back(c);
                if (extend(out_colors)) return true;
                out_colors.pop_back();
                path.pop_back();
                on_path &= ~bit(w);
                color_used[c] = 0;
            }
        }
        return false;
    }
};

} // namespace detail

// Exact backtracking anchored at vertex 0. A miss is an exhaustive proof of
// non-existence (reported via the attestation fields), which on a
// double-Hall-derived multigraph would be a conjecture counterexample.
inline RainbowCycleSearch find_rainbow_hamiltonian_cycle(const ColoredMultigraph& m,
                                                         int vertex_cap = 14) {
    const int n = m.vertex_count;
    if (n < 2) throw precondition_error("need at least 2 vertices");
    if (n > vertex_cap)
        throw size_cap_error("cycle search capped at " + std::to_string(vertex_cap) +
                             " vertices");
    RainbowCycleSearch res;
    if (n == 2) {
        res.nodes_expanded = 1;
        const auto cs = m.colors_on(0, 1);
        if (cs.size() >= 2) {
            res.cycle = RainbowCycle{{0, 1}, {cs[0], cs[1]}};
        } else {
            res.exhaustive = true;
        }
        return res;
    }
    detail::CycleBacktracker bt(m);
    bt.path.push_back(0);
    bt.on_path = bit(0);
    std::vector<int> colors;
    const bool ok = bt.extend(colors);
    res.nodes_expanded = bt.nodes;
    if (ok) {
        res.cycle = RainbowCycle{bt.path, colors};
    } else {
        res.exhaustive = true;
    }
    return res;
}

// Independent oracle: enumerate vertex orders outright, then ask for a
// system of distinct colors along the cycle via augmenting paths. Keep this
// free of the backtracker's machinery.
inline std::optional<RainbowCycle> find_rainbow_cycle_by_permutations(const ColoredMultigraph& m) {
    const int n = m.vertex_count;
    if (n < 2) throw precondition_error("need at least 2 vertices");
    if (n > 9) throw size_cap_error("permutation oracle capped at 9 vertices");

    auto assign_colors = [&](const std::vector<int>& order) -> std::optional<std::vector<int>> {
        std::vector<std::vector<int>> edge_colors(n);
        for (int i = 0; i < n; ++i)
            edge_colors[i] = m.colors_on(order[i], order[(i + 1) % n]);
        std::vector<int> color_of_edge(n, -1);
        std::vector<int> edge_of_color(m.color_count(), -1);
        std::function<bool(int, std::vector<char>&)> augment =
            [&](int e, std::vector<char>& seen) -> bool {
            for (int c : edge_colors[e]) {
                if (seen[c]) continue;
                seen[c] = 1;
                if (edge_of_color[c] < 0 || augment(edge_of_color[c], seen)) {
                    edge_of_color[c] = e;
                    color_of_edge[e] = c;
                    return true;
                }
            }
            return false;
        };
        for (int e = 0; e < n; ++e) {
            std::vector<char> seen(m.color_count(), 0);
            if (!augment(e, seen)) return std::nullopt;
        }
        return color_of_edge;
    };

    if (n == 2) {
        const std::vector<int> order{0, 1};
        if (auto cols = assign_colors(order)) return RainbowCycle{order, *cols};
        return std::nullopt;
    }
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        if (rest.front() > rest.back()) continue; // reflection
        std::vector<int> order;
        order.push_back(0);
        order.insert(order.end(), rest.begin(), rest.end());
        if (auto cols = assign_colors(order)) return RainbowCycle{order, *cols};
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

} // namespace dhp
