#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dhp/bits.hpp"
#include "dhp/errors.hpp"

namespace dhp {

// Simple bipartite graph G(A,B). A-vertices are 0..a_count-1 and capped at
// one machine word so every A-subset is a single mask; B is unbounded.
// Immutable after construction; safe to share across threads.
class BipartiteGraph {
public:
    static constexpr int max_a_count = 64;

    BipartiteGraph(int a_count, std::vector<mask_t> b_adjacency)
        : a_count_(a_count), adj_(std::move(b_adjacency)) {
        if (a_count_ < 1)
            throw precondition_error("a_count must be at least 1");
        if (a_count_ > max_a_count)
            throw size_cap_error("a_count " + std::to_string(a_count_) +
                                 " exceeds the word cap of 64");
        const mask_t a_all = low_mask(a_count_);
        a_degree_.assign(a_count_, 0);
        for (std::size_t b = 0; b < adj_.size(); ++b) {
            if (adj_[b] & ~a_all)
                throw precondition_error("B-vertex " + std::to_string(b) +
                                         " has an out-of-range neighbor");
            for_each_bit(adj_[b], [&](int a) { ++a_degree_[a]; });
        }
    }

    int a_count() const { return a_count_; }
    int b_count() const { return static_cast<int>(adj_.size()); }
    mask_t a_mask() const { return low_mask(a_count_); }

    mask_t neighbors_of_b(int b) const { return adj_[b]; }
    int degree_b(int b) const { return popcount(adj_[b]); }
    int degree_a(int a) const { return a_degree_[a]; }
    bool has_edge(int a, int b) const { return has_bit(adj_[b], a); }

    long long edge_count() const {
        long long e = 0;
        for (mask_t m : adj_) e += popcount(m);
        return e;
    }

    // Edges sorted by (a, b); the canonical order used by the file format.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int a = 0; a < a_count_; ++a)
            for (int b = 0; b < b_count(); ++b)
                if (has_bit(adj_[b], a)) out.emplace_back(a, b);
        return out;
    }

private:
    int a_count_;
    std::vector<mask_t> adj_;
    std::vector<int> a_degree_;
};

inline BipartiteGraph from_edge_list(int a_count, int b_count,
                                     const std::vector<std::pair<int, int>>& edges) {
    if (a_count < 1) throw precondition_error("a_count must be at least 1");
    if (a_count > BipartiteGraph::max_a_count)
        throw size_cap_error("a_count " + std::to_string(a_count) +
                             " exceeds the word cap of 64");
    if (b_count < 0) throw precondition_error("b_count must be non-negative");
    std::vector<mask_t> adj(static_cast<std::size_t>(b_count), 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= a_count || b < 0 || b >= b_count)
            throw precondition_error("edge (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ") is out of range");
        if (has_bit(adj[b], a))
            throw precondition_error("duplicate edge (" + std::to_string(a) +
                                     ", " + std::to_string(b) + ")");
        adj[b] |= bit(a);
    }
    return BipartiteGraph(a_count, std::move(adj));
}

// B-vertices of degree <= 1 never contribute to a 2-neighborhood, so the
// double Hall verdict is unchanged by dropping them. Surviving B-vertices
// keep their relative order.
inline BipartiteGraph strip_degree_le1(const BipartiteGraph& g) {
    std::vector<mask_t> kept;
    kept.reserve(static_cast<std::size_t>(g.b_count()));
    for (int b = 0; b < g.b_count(); ++b)
        if (g.degree_b(b) >= 2) kept.push_back(g.neighbors_of_b(b));
    return BipartiteGraph(g.a_count(), std::move(kept));
}

// Original indices of the B-vertices that strip_degree_le1 keeps.
inline std::vector<int> kept_b_indices(const BipartiteGraph& g) {
    std::vector<int> out;
    for (int b = 0; b < g.b_count(); ++b)
        if (g.degree_b(b) >= 2) out.push_back(b);
    return out;
}

} // namespace dhp
