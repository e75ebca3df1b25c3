#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/dhp_check.hpp"
#include "dhp/errors.hpp"
#include "dhp/extremal.hpp"
#include "dhp/rng.hpp"

namespace dhp {

enum class DegreeProfile { uniform, two_n, tree };

inline const char* profile_name(DegreeProfile p) {
    switch (p) {
        case DegreeProfile::uniform: return "uniform";
        case DegreeProfile::two_n: return "two-n";
        case DegreeProfile::tree: return "tree";
    }
    return "?";
}

inline DegreeProfile parse_profile(const std::string& s) {
    if (s == "uniform") return DegreeProfile::uniform;
    if (s == "two-n") return DegreeProfile::two_n;
    if (s == "tree") return DegreeProfile::tree;
    throw precondition_error("unknown profile '" + s + "'");
}

struct SampleConfig {
    int a_count = 4;
    int b_count = 4;
    DegreeProfile profile = DegreeProfile::uniform;
    std::uint64_t seed = 0;
    int max_attempts = 5000;
};

struct SampleResult {
    BipartiteGraph graph;
    std::uint64_t seed = 0;
    int attempts = 0;
};

namespace detail {

inline mask_t random_subset_of_size(SplitMix64& rng, int n, int size) {
    mask_t m = 0;
    while (popcount(m) < size) m |= bit((int)rng.below(n));
    return m;
}

inline std::vector<mask_t> draw_adjacency(SplitMix64& rng, int n, int b_count,
                                          DegreeProfile profile) {
    std::vector<mask_t> adj;
    adj.reserve(b_count);
    switch (profile) {
        case DegreeProfile::uniform:
            for (int b = 0; b < b_count; ++b) {
                const int d = 2 + (int)rng.below(n - 1); // 2..n
                adj.push_back(random_subset_of_size(rng, n, d));
            }
            break;
        case DegreeProfile::two_n: {
            // full-degree vertices must nearly dominate: a set X only sees
            // full colors plus the size-2 colors inside it, so with few
            // full vertices most degree-2 placements cannot satisfy the
            // property at all. k in {n-2, n-1} keeps acceptance high while
            // leaving room for genuine size-2 colors.
            int full = n - 1 - (int)rng.below(2);
            if (full < 1) full = 1;
            if (full > b_count - 1) full = b_count - 1;
            for (int b = 0; b < b_count; ++b) {
                if (b < full)
                    adj.push_back(low_mask(n));
                else
                    adj.push_back(random_subset_of_size(rng, n, 2));
            }
            break;
        }
        case DegreeProfile::tree: {
            const BipartiteGraph base = binary_tree_dhp(random_binary_tree(n, rng.next()));
            adj.assign(base.b_count(), 0);
            for (int b = 0; b < base.b_count(); ++b) adj[b] = base.neighbors_of_b(b);
            while ((int)adj.size() < b_count)
                adj.push_back(random_subset_of_size(rng, n, 2));
            // a few extra random edges keep the instances off the exact
            // tree shape; supersets never lose the double Hall property
            const int extra = (int)rng.below(n + 1);
            for (int i = 0; i < extra; ++i)
                adj[rng.below(adj.size())] |= bit((int)rng.below(n));
            break;
        }
    }
    return adj;
}

} // namespace detail

// Rejection sampler: draw per the profile until the double Hall check
// passes. The tree profile succeeds on the first attempt by construction.
inline SampleResult sample_dhp(const SampleConfig& cfg) {
    if (cfg.a_count < 2) throw precondition_error("need |A| >= 2");
    if (cfg.b_count < cfg.a_count)
        throw precondition_error("need |B| >= |A|: the double Hall property at X = A "
                                 "forces at least |A| B-vertices");
    SplitMix64 rng(cfg.seed);
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        std::vector<mask_t> adj =
            detail::draw_adjacency(rng, cfg.a_count, cfg.b_count, cfg.profile);
        BipartiteGraph g(cfg.a_count, std::move(adj));
        if (check_dhp(g).holds) return SampleResult{std::move(g), cfg.seed, attempt};
    }
    throw size_cap_error("no double Hall instance found within " +
                         std::to_string(cfg.max_attempts) + " attempts");
}

} // namespace dhp
