#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/errors.hpp"

namespace dhp {

// Complete graph on vertex_count vertices where every color induces a
// clique. Built from a bipartite graph by turning each B-vertex b into a
// color whose clique is N(b); color_source remembers the originating
// B-index for reporting. For double-Hall sources every vertex pair carries
// at least two colors; arbitrary sources may leave pairs bare.
struct ColoredMultigraph {
    int vertex_count = 0;
    std::vector<mask_t> cliques;
    std::vector<int> color_source;

    int color_count() const { return static_cast<int>(cliques.size()); }

    bool pair_has_color(int u, int v, int c) const {
        const mask_t uv = bit(u) | bit(v);
        return (cliques[c] & uv) == uv;
    }

    std::vector<int> colors_on(int u, int v) const {
        std::vector<int> out;
        const mask_t uv = bit(u) | bit(v);
        for (int c = 0; c < color_count(); ++c)
            if ((cliques[c] & uv) == uv) out.push_back(c);
        return out;
    }

    int count_colors_on(int u, int v) const {
        int k = 0;
        const mask_t uv = bit(u) | bit(v);
        for (const mask_t cl : cliques)
            if ((cl & uv) == uv) ++k;
        return k;
    }

    // Number of colors with at least one edge inside x; equals |N^2(X)| of
    // the source graph.
    int span_count(mask_t x) const {
        int k = 0;
        for (const mask_t cl : cliques)
            if (popcount(cl & x) >= 2) ++k;
        return k;
    }

    int max_clique_size() const {
        int d = 0;
        for (const mask_t cl : cliques) d = std::max(d, popcount(cl));
        return d;
    }
};

inline ColoredMultigraph to_colored_multigraph(const BipartiteGraph& g) {
    if (g.a_count() < 2)
        throw precondition_error("need at least 2 A-vertices");
    ColoredMultigraph m;
    m.vertex_count = g.a_count();
    m.cliques.reserve(static_cast<std::size_t>(g.b_count()));
    for (int b = 0; b < g.b_count(); ++b) {
        if (g.degree_b(b) < 2)
            throw precondition_error("B-vertex " + std::to_string(b) +
                                     " has degree < 2; strip it first");
        m.cliques.push_back(g.neighbors_of_b(b));
        m.color_source.push_back(b);
    }
    return m;
}

} // namespace dhp
