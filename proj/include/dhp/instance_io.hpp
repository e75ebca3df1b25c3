#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dhp/bipartite_graph.hpp"
#include "dhp/errors.hpp"
#include "dhp/graph.hpp"

namespace dhp {

// Line-oriented instance format:
//
//   dhp v1
//   #meta <key> <value...>     (optional, any number)
//   A <n> B <m>
//   <a> <b>                    (one edge per line, 0-based)
//
// '#' starts a comment anywhere; plain comments are dropped on emission,
// #meta lines survive canonicalization. A JSON object with the same fields
// is accepted on input for tooling.
struct InstanceMetadata {
    std::map<std::string, std::string> entries;
};

struct Instance {
    BipartiteGraph graph;
    InstanceMetadata metadata;
};

namespace detail {

inline bool json_like(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

inline bool blank_line(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

inline Instance parse_instance_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    try {
        const int a = j.at("a_count").get<int>();
        const int b = j.at("b_count").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Instance inst{from_edge_list(a, b, edges), {}};
        if (j.contains("metadata"))
            for (auto& [k, v] : j.at("metadata").items())
                inst.metadata.entries[k] = v.get<std::string>();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON instance: ") + e.what());
    }
}

} // namespace detail

inline Instance parse_instance(const std::string& text) {
    if (detail::json_like(text)) return detail::parse_instance_json(text);

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    InstanceMetadata meta;
    int stage = 0; // 0: want header, 1: want counts, 2: edges
    int a_count = 0, b_count = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string content = line;
        const auto hash = content.find('#');
        if (hash != std::string::npos) {
            std::istringstream ms(content.substr(hash + 1));
            std::string tag, key;
            if (ms >> tag && tag == "meta" && ms >> key) {
                std::string value;
                std::getline(ms, value);
                const auto start = value.find_first_not_of(' ');
                meta.entries[key] = start == std::string::npos ? "" : value.substr(start);
            }
            content = content.substr(0, hash);
        }
        if (detail::blank_line(content)) continue;
        std::istringstream ls(content);
        if (stage == 0) {
            std::string word, version;
            if (!(ls >> word) || word != "dhp" || !(ls >> version) || version != "v1")
                throw parse_error("expected header 'dhp v1'", lineno, 1);
            stage = 1;
        } else if (stage == 1) {
            std::string wa, wb;
            if (!(ls >> wa) || wa != "A" || !(ls >> a_count >> wb) || wb != "B" ||
                !(ls >> b_count))
                throw parse_error("expected 'A <n> B <m>'", lineno, 1);
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens after counts", lineno, 1);
            stage = 2;
        } else {
            int a, b;
            if (!(ls >> a) || !(ls >> b))
                throw parse_error("edge line needs two integers", lineno, 1);
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens on edge line", lineno, 1);
            edges.emplace_back(a, b);
        }
    }
    if (stage == 0) throw parse_error("missing header 'dhp v1'", lineno, 1);
    if (stage == 1) throw parse_error("missing 'A <n> B <m>' line", lineno, 1);
    try {
        return Instance{from_edge_list(a_count, b_count, edges), std::move(meta)};
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

// Canonical emission: metadata sorted by key, edges sorted by (a, b).
inline std::string emit_instance(const BipartiteGraph& g, const InstanceMetadata& meta = {}) {
    std::ostringstream out;
    out << "dhp v1\n";
    for (const auto& [k, v] : meta.entries) out << "#meta " << k << " " << v << "\n";
    out << "A " << g.a_count() << " B " << g.b_count() << "\n";
    for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
    return out.str();
}

// Companion format for general graphs ("graph v1" / "V <n>" / edge lines),
// so the non-bipartite routines are reachable from the command line.
inline Graph parse_graph_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, stage = 0, n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (detail::blank_line(line)) continue;
        std::istringstream ls(line);
        if (stage == 0) {
            std::string word, version;
            if (!(ls >> word) || word != "graph" || !(ls >> version) || version != "v1")
                throw parse_error("expected header 'graph v1'", lineno, 1);
            stage = 1;
        } else if (stage == 1) {
            std::string wv;
            if (!(ls >> wv) || wv != "V" || !(ls >> n))
                throw parse_error("expected 'V <n>'", lineno, 1);
            stage = 2;
        } else {
            int u, v;
            if (!(ls >> u) || !(ls >> v))
                throw parse_error("edge line needs two integers", lineno, 1);
            edges.emplace_back(u, v);
        }
    }
    if (stage != 2) throw parse_error("incomplete general-graph instance", lineno, 1);
    try {
        return Graph(n, std::move(edges));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

inline std::string emit_graph_instance(const Graph& g) {
    std::ostringstream out;
    out << "graph v1\nV " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace dhp
