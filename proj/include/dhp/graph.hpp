#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/errors.hpp"

namespace dhp {

// Simple undirected graph on at most 64 vertices, adjacency as bitmask rows.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count), edges_(std::move(edge_list)) {
        if (n_ < 1) throw precondition_error("vertex_count must be at least 1");
        if (n_ > max_vertices)
            throw size_cap_error("vertex_count exceeds the word cap of 64");
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto& [u, v] : edges_) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw precondition_error("edge endpoint out of range");
            if (u == v) throw precondition_error("loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (has_bit(adj_[u], v))
                throw precondition_error("duplicate edge (" + std::to_string(u) +
                                         ", " + std::to_string(v) + ")");
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    mask_t vertex_mask() const { return low_mask(n_); }
    mask_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return has_bit(adj_[u], v); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<mask_t> adj_;
};

// Combined single-graph view of a bipartite graph: A first, then B.
inline Graph to_host_graph(const BipartiteGraph& g) {
    const int n = g.a_count();
    if (n + g.b_count() > Graph::max_vertices)
        throw size_cap_error("combined vertex count exceeds the word cap of 64");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) es.emplace_back(a, n + b);
    return Graph(n + g.b_count(), std::move(es));
}

// Multigraph: parallel edges allowed, loops are not. Plain data; consumers
// validate what they need.
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

} // namespace dhp
