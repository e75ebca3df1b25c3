#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/errors.hpp"
#include "dhp/graph.hpp"

namespace dhp {

struct DhpVerdict {
    bool holds = true;
    std::optional<std::vector<int>> witness; // ascending vertex ids, size >= 2
    int deficiency = 0;                      // |X| - |N^2(X)| for the witness
    std::uint64_t subsets_examined = 0;      // 2-neighborhoods actually computed
};

// N^2(X) in a bipartite graph: B-vertices with >= 2 neighbors inside x.
inline int two_neighborhood_count(const BipartiteGraph& g, mask_t x) {
    int k = 0;
    for (int b = 0; b < g.b_count(); ++b)
        if (popcount(g.neighbors_of_b(b) & x) >= 2) ++k;
    return k;
}

inline std::vector<int> two_neighborhood(const BipartiteGraph& g, mask_t x) {
    std::vector<int> out;
    for (int b = 0; b < g.b_count(); ++b)
        if (popcount(g.neighbors_of_b(b) & x) >= 2) out.push_back(b);
    return out;
}

// N^2(X) in a general graph: any vertex (members of X included) with >= 2
// neighbors inside x.
inline mask_t two_neighborhood(const Graph& g, mask_t x) {
    mask_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (popcount(g.neighbors(v) & x) >= 2) out |= bit(v);
    return out;
}

namespace detail {

// Exhaustive scan over all X with |X| >= 2, by size, lexicographic within a
// size so the reported witness is minimal. Pruning rests on monotonicity of
// N^2 under inclusion: once |N^2(X)| >= n, no superset of X can violate.
template <typename CountFn>
DhpVerdict dhp_scan(int n, CountFn&& n2_count, bool prune) {
    DhpVerdict verdict;
    std::vector<mask_t> safe;
    std::vector<int> idx;
    for (int size = 2; size <= n; ++size) {
        idx.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            mask_t x = 0;
            for (int i : idx) x |= bit(i);
            bool skip = false;
            if (prune) {
                for (mask_t s : safe)
                    if ((s & x) == s) { skip = true; break; }
            }
            if (!skip) {
                ++verdict.subsets_examined;
                const int c = n2_count(x);
                if (c < size) {
                    verdict.holds = false;
                    verdict.witness = bits_of(x);
                    verdict.deficiency = size - c;
                    return verdict;
                }
                if (prune && c >= n && safe.size() < 128) safe.push_back(x);
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return verdict;
}

} // namespace detail

inline DhpVerdict check_dhp(const BipartiteGraph& g, bool prune = true) {
    if (g.a_count() < 2)
        throw precondition_error("double Hall property needs |A| >= 2");
    return detail::dhp_scan(
        g.a_count(), [&](mask_t x) { return two_neighborhood_count(g, x); }, prune);
}

inline DhpVerdict check_dhp_general(const Graph& g, bool prune = true) {
    if (g.vertex_count() < 2)
        throw precondition_error("double Hall property needs >= 2 vertices");
    return detail::dhp_scan(
        g.vertex_count(),
        [&](mask_t x) { return popcount(two_neighborhood(g, x)); }, prune);
}

} // namespace dhp
