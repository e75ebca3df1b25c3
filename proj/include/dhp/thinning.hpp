#pragma once

#include <string>
#include <vector>

#include "dhp/colored_multigraph.hpp"
#include "dhp/errors.hpp"
#include "dhp/orientation.hpp"

namespace dhp {

// One chosen color per edge of the complete graph on vertex_count vertices.
struct ThinnedColoring {
    int vertex_count = 0;
    std::vector<int> chosen; // flat vertex_count x vertex_count, -1 on the diagonal
    std::vector<int> usage;  // per color
    int delta = 0;           // max color clique size
    int usage_bound = 0;     // ceil(C(delta,2)/2)

    int chosen_for(int u, int v) const { return chosen[u * vertex_count + v]; }
    int max_usage() const {
        int worst = 0;
        for (int c : usage) worst = std::max(worst, c);
        return worst;
    }
};

// Auxiliary multigraph on color ids: one edge {c, c'} per pair of the
// complete graph, where c < c' are the two smallest colors carried by the
// pair. Pairs of the complete graph are taken in lexicographic order, so
// edge i of the result is pair i.
inline Multigraph thinning_aux_multigraph(const ColoredMultigraph& m) {
    Multigraph h;
    h.vertex_count = m.color_count();
    const int n = m.vertex_count;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int c1 = -1, c2 = -1;
            for (int c = 0; c < m.color_count(); ++c) {
                if (!m.pair_has_color(u, v, c)) continue;
                if (c1 < 0) {
                    c1 = c;
                } else {
                    c2 = c;
                    break;
                }
            }
            if (c2 < 0)
                throw precondition_error("pair (" + std::to_string(u) + ", " +
                                         std::to_string(v) +
                                         ") carries fewer than 2 colors");
            h.edges.emplace_back(c1, c2);
        }
    }
    return h;
}

// Keep two colors per edge, orient the auxiliary color multigraph with
// balanced imbalance, and pick the color at the head of each arc. A color c
// then serves at most ceil(deg_H(c)/2) <= ceil(C(delta,2)/2) edges.
inline ThinnedColoring thin_colors(const ColoredMultigraph& m) {
    const Multigraph h = thinning_aux_multigraph(m);
    const Orientation o = balanced_orientation(h);

    ThinnedColoring t;
    t.vertex_count = m.vertex_count;
    t.chosen.assign(m.vertex_count * m.vertex_count, -1);
    t.usage.assign(m.color_count(), 0);
    int i = 0;
    for (int u = 0; u < m.vertex_count; ++u) {
        for (int v = u + 1; v < m.vertex_count; ++v, ++i) {
            const int head = o.arc(h, i).second;
            t.chosen[u * m.vertex_count + v] = head;
            t.chosen[v * m.vertex_count + u] = head;
            ++t.usage[head];
        }
    }
    t.delta = m.max_clique_size();
    const long long pairs = (long long)t.delta * (t.delta - 1) / 2;
    t.usage_bound = (int)((pairs + 1) / 2);
    return t;
}

// Arithmetic side of the sparse-color regime: with Delta capped at
// sqrt(n)/4 the per-color budget stays under n/64. Exact in integers; holds
// for every Delta >= 2 once n exceeds 64, with equality spoiling the strict
// inequality only at the (Delta, n) = (2, 64) boundary.
inline bool afr_arithmetic_ok(int delta, long long n) {
    const long long pairs = (long long)delta * (delta - 1) / 2;
    const long long bound = (pairs + 1) / 2;
    return 64 * bound < n;
}

} // namespace dhp
