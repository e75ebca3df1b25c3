#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/errors.hpp"
#include "dhp/rng.hpp"

namespace dhp {

// Rooted binary tree; node 0 is the root, children[v] = {-1,-1} marks a
// leaf, otherwise both children must be present.
struct BinaryTreeSpec {
    std::vector<std::array<int, 2>> children;

    int node_count() const { return (int)children.size(); }

    bool is_leaf(int v) const { return children[v][0] < 0; }

    int leaf_count() const {
        int k = 0;
        for (int v = 0; v < node_count(); ++v)
            if (is_leaf(v)) ++k;
        return k;
    }

    void validate() const {
        if (children.empty()) throw precondition_error("empty tree");
        std::vector<int> indeg(node_count(), 0);
        for (int v = 0; v < node_count(); ++v) {
            const auto [l, r] = children[v];
            if ((l < 0) != (r < 0))
                throw precondition_error("node " + std::to_string(v) +
                                         " has exactly one child");
            if (l >= 0) {
                if (l >= node_count() || r >= node_count() || l == r)
                    throw precondition_error("bad child ids at node " + std::to_string(v));
                ++indeg[l];
                ++indeg[r];
            }
        }
        if (indeg[0] != 0) throw precondition_error("root has a parent");
        for (int v = 1; v < node_count(); ++v)
            if (indeg[v] != 1) throw precondition_error("node " + std::to_string(v) +
                                                        " is not reached exactly once");
    }
};

inline BinaryTreeSpec complete_binary_tree(int leaves) {
    if (leaves < 2 || (leaves & (leaves - 1)))
        throw precondition_error("complete tree needs a power-of-two leaf count >= 2");
    BinaryTreeSpec t;
    // heap layout: node v has children 2v+1, 2v+2
    const int total = 2 * leaves - 1;
    t.children.assign(total, {-1, -1});
    for (int v = 0; 2 * v + 2 < total; ++v) t.children[v] = {2 * v + 1, 2 * v + 2};
    return t;
}

// Grow by splitting a uniformly chosen leaf until the leaf budget is met.
inline BinaryTreeSpec random_binary_tree(int leaves, std::uint64_t seed) {
    if (leaves < 2) throw precondition_error("need at least 2 leaves");
    BinaryTreeSpec t;
    t.children.assign(1, {-1, -1});
    std::vector<int> open{0};
    SplitMix64 rng(seed);
    for (int step = 1; step < leaves; ++step) {
        const std::size_t pick = rng.below(open.size());
        const int v = open[pick];
        const int l = t.node_count();
        t.children.push_back({-1, -1});
        t.children.push_back({-1, -1});
        t.children[v] = {l, l + 1};
        open[pick] = l;
        open.push_back(l + 1);
    }
    return t;
}

// Bipartite graph of a binary tree: A = leaves, B = internal nodes plus one
// extra vertex y adjacent to every leaf; each leaf is also joined to all of
// its ancestors. Ids follow BFS order on the tree, y last.
inline BipartiteGraph binary_tree_dhp(const BinaryTreeSpec& t) {
    t.validate();
    const int leaves = t.leaf_count();
    if (leaves < 2) throw precondition_error("need at least 2 leaves");

    std::vector<int> a_id(t.node_count(), -1), b_id(t.node_count(), -1);
    std::vector<int> parent(t.node_count(), -1);
    int next_a = 0, next_b = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        if (t.is_leaf(v)) {
            a_id[v] = next_a++;
        } else {
            b_id[v] = next_b++;
            parent[t.children[v][0]] = v;
            parent[t.children[v][1]] = v;
            bfs.push(t.children[v][0]);
            bfs.push(t.children[v][1]);
        }
    }
    const int y = next_b;
    std::vector<mask_t> adj(next_b + 1, 0);
    for (int v = 0; v < t.node_count(); ++v) {
        if (!t.is_leaf(v)) continue;
        adj[y] |= bit(a_id[v]);
        for (int anc = parent[v]; anc >= 0; anc = parent[anc])
            adj[b_id[anc]] |= bit(a_id[v]);
    }
    return BipartiteGraph(leaves, std::move(adj));
}

// f(W): per color present inside W, the restricted clique size minus one.
// Over the whole vertex set this equals e(G) - |B| for the source graph.
inline long long edge_potential(const ColoredMultigraph& m, mask_t w) {
    long long total = 0;
    for (const mask_t cl : m.cliques) {
        const int inside = popcount(cl & w);
        if (inside >= 2) total += inside - 1;
    }
    return total;
}

struct LowerBoundReport {
    bool holds = true;
    long long edge_count = 0;
    double bound = 0;
};

// Edge-count floor for double Hall graphs: e(G) >= n/2 * log2(n) + |B|.
// Real-valued logarithm with a small slack so equality cases do not flap.
// Callers are responsible for the double Hall precondition; isolated
// vertices are rejected here.
inline LowerBoundReport check_lower_bound(const BipartiteGraph& g) {
    for (int a = 0; a < g.a_count(); ++a)
        if (g.degree_a(a) == 0)
            throw precondition_error("isolated A-vertex " + std::to_string(a));
    for (int b = 0; b < g.b_count(); ++b)
        if (g.degree_b(b) == 0)
            throw precondition_error("isolated B-vertex " + std::to_string(b));
    LowerBoundReport r;
    r.edge_count = g.edge_count();
    const double n = g.a_count();
    r.bound = 0.5 * n * std::log2(n) + g.b_count();
    r.holds = (double)r.edge_count + 1e-9 >= r.bound;
    return r;
}

// Edge-saving rewiring for A-degree gaps larger than 2: both u and v are
// reattached to N(v) plus one fresh shared B-vertex. Preserves the double
// Hall property and strictly lowers the edge count.
inline BipartiteGraph balance_degrees(const BipartiteGraph& g, int u, int v) {
    if (u < 0 || u >= g.a_count() || v < 0 || v >= g.a_count() || u == v)
        throw precondition_error("u and v must be distinct A-vertices");
    if (g.degree_a(u) <= g.degree_a(v) + 2)
        throw precondition_error("requires d(u) > d(v) + 2");
    std::vector<mask_t> adj;
    adj.reserve(g.b_count() + 1);
    const mask_t uv = bit(u) | bit(v);
    for (int b = 0; b < g.b_count(); ++b) {
        mask_t m = g.neighbors_of_b(b) & ~uv;
        if (g.has_edge(v, b)) m |= uv;
        adj.push_back(m);
    }
    adj.push_back(uv); // the fresh shared vertex
    return BipartiteGraph(g.a_count(), std::move(adj));
}

} // namespace dhp
