#pragma once

#include <vector>

namespace dhp {

// Vertex-disjoint cycles in a host graph. Each cycle lists its vertices in
// traversal order; the closing edge back to the front is implicit. For
// bipartite hosts vertices use combined ids (A first, then B). edge_colors,
// when non-empty, is aligned with cycles: color of the edge from vertex j
// to vertex j+1 (mod length).
struct CycleFamily {
    std::vector<std::vector<int>> cycles;
    std::vector<std::vector<int>> edge_colors;

    bool colored() const { return !edge_colors.empty(); }

    int cycle_count() const { return static_cast<int>(cycles.size()); }

    int vertex_total() const {
        int n = 0;
        for (const auto& c : cycles) n += static_cast<int>(c.size());
        return n;
    }
};

} // namespace dhp
