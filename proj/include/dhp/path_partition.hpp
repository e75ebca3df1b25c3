#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <vector>

#include "dhp/bits.hpp"
#include "dhp/errors.hpp"
#include "dhp/graph.hpp"

namespace dhp {

// Exact independence number by branch and bound on adjacency masks.
inline int independence_number(const Graph& g, int vertex_cap = 24) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw size_cap_error("independence number capped at " +
                             std::to_string(vertex_cap) + " vertices");
    std::function<int(mask_t)> best = [&](mask_t avail) -> int {
        if (!avail) return 0;
        // branch on a max-degree vertex inside avail
        int pick = -1, deg = -1;
        for_each_bit(avail, [&](int v) {
            const int d = popcount(g.neighbors(v) & avail);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        });
        if (deg == 0) return popcount(avail); // isolated remainder
        const int with = 1 + best(avail & ~(g.neighbors(pick) | bit(pick)));
        const int without = best(avail & ~bit(pick));
        return std::max(with, without);
    };
    return best(g.vertex_mask());
}

struct PathPartition {
    std::vector<std::vector<int>> paths; // singletons allowed
};

namespace detail {

// Cover all vertices with at most `target` vertex-disjoint paths. Each new
// path is rooted at the lowest uncovered vertex and grown at both ends, so
// the enumeration is complete. Returns false only after exhausting the
// space.
inline bool cover_with_paths(const Graph& g, int target, PathPartition& out) {
    std::deque<int> current;
    std::vector<std::vector<int>> done;
    std::function<bool(mask_t, int)> rec = [&](mask_t covered, int used) -> bool {
        if (current.empty()) {
            if (covered == g.vertex_mask()) return true;
            if (used == target) return false;
            const int v = lowest_bit(~covered & g.vertex_mask());
            current.push_back(v);
            if (rec(covered | bit(v), used + 1)) return true;
            current.clear();
            return false;
        }
        // grow at either end
        for (int side = 0; side < 2; ++side) {
            const int end = side == 0 ? current.back() : current.front();
            mask_t options = g.neighbors(end) & ~covered;
            bool found = false;
            for_each_bit(options, [&](int w) {
                if (found) return;
                if (side == 0)
                    current.push_back(w);
                else
                    current.push_front(w);
                if (rec(covered | bit(w), used)) {
                    found = true;
                    return;
                }
                if (side == 0)
                    current.pop_back();
                else
                    current.pop_front();
            });
            if (found) return true;
        }
        // close the current path
        done.emplace_back(current.begin(), current.end());
        std::deque<int> saved;
        saved.swap(current);
        if (rec(covered, used)) return true;
        current.swap(saved);
        done.pop_back();
        return false;
    };
    if (rec(0, 0)) {
        // success always closes the open path first, so done is complete
        out.paths = done;
        return true;
    }
    return false;
}

} // namespace detail

// Partition V(g) into at most `budget` vertex-disjoint paths. Callers rely
// on alpha(g) <= budget (the Gallai-Milgram guarantee); when alpha is
// computable we also never emit more than alpha paths. Greedy endpoint
// merging handles most inputs; the complete search backs it up.
inline PathPartition path_partition_gallai_milgram(const Graph& g, int budget) {
    const int n = g.vertex_count();
    int target = budget;
    if (n <= 24) target = std::min(target, independence_number(g));

    // greedy: repeatedly concatenate two paths with adjacent endpoints
    std::vector<std::deque<int>> paths;
    for (int v = 0; v < n; ++v) paths.push_back({v});
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < paths.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < paths.size() && !merged; ++j) {
                auto& p = paths[i];
                auto& q = paths[j];
                if (g.has_edge(p.back(), q.front())) {
                    p.insert(p.end(), q.begin(), q.end());
                } else if (g.has_edge(p.back(), q.back())) {
                    p.insert(p.end(), q.rbegin(), q.rend());
                } else if (g.has_edge(p.front(), q.front())) {
                    p.insert(p.begin(), q.rbegin(), q.rend());
                } else if (g.has_edge(p.front(), q.back())) {
                    p.insert(p.begin(), q.begin(), q.end());
                } else {
                    continue;
                }
                paths.erase(paths.begin() + j);
                merged = true;
            }
        }
    }
    if ((int)paths.size() <= target) {
        PathPartition out;
        for (auto& p : paths) out.paths.emplace_back(p.begin(), p.end());
        return out;
    }

    PathPartition out;
    if (!detail::cover_with_paths(g, target, out))
        throw contradiction_error(
            "no partition into " + std::to_string(target) +
            " paths exists; the independence-number guarantee was violated");
    return out;
}

} // namespace dhp
