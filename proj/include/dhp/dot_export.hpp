#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "dhp/bipartite_graph.hpp"
#include "dhp/cycle_family.hpp"

namespace dhp {

// Graphviz document with one rank per side; edges of the highlighted cycle
// family (combined ids) are drawn bold.
inline std::string export_dot(const BipartiteGraph& g, const CycleFamily* highlight = nullptr) {
    const int n = g.a_count();
    std::set<std::pair<int, int>> bold;
    if (highlight) {
        for (const auto& cyc : highlight->cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
                if (x > y) std::swap(x, y);
                bold.insert({x, y});
            }
        }
    }
    std::ostringstream out;
    out << "graph dhp {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  { rank=same;";
    for (int a = 0; a < n; ++a) out << " a" << a << ";";
    out << " }\n";
    if (g.b_count() > 0) {
        out << "  { rank=same;";
        for (int b = 0; b < g.b_count(); ++b) out << " b" << b << ";";
        out << " }\n";
    }
    for (auto [a, b] : g.edges()) {
        out << "  a" << a << " -- b" << b;
        if (bold.count({a, n + b})) out << " [penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace dhp
