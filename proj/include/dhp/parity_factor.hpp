#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/errors.hpp"
#include "dhp/graph.hpp"

namespace dhp {

// Degree window per vertex: g(v) <= deg(v) <= f(v) with deg(v) == f(v) mod 2.
struct ParityFactorSpec {
    std::vector<int> f;
    std::vector<int> g;
};

inline ParityFactorSpec make_parity_factor_spec(std::vector<int> f, std::vector<int> g) {
    if (f.size() != g.size())
        throw precondition_error("f and g must have the same length");
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (g[v] < 0 || g[v] > f[v] || ((f[v] - g[v]) & 1))
            throw precondition_error("need 0 <= g(v) <= f(v) with equal parity at vertex " +
                                     std::to_string(v));
    }
    return ParityFactorSpec{std::move(f), std::move(g)};
}

// Spec whose parity factors are exactly the 2-factors covering A: f = 2
// everywhere, g = 2 on A and 0 on B (host order: A first, then B).
inline ParityFactorSpec covering_spec(const BipartiteGraph& gr) {
    const int total = gr.a_count() + gr.b_count();
    std::vector<int> f(total, 2), g(total, 2);
    for (int b = 0; b < gr.b_count(); ++b) g[gr.a_count() + b] = 0;
    return ParityFactorSpec{std::move(f), std::move(g)};
}

struct ConditionReport {
    bool satisfied = true;
    std::optional<std::vector<int>> violating_s;
    std::optional<std::vector<int>> violating_t;
    long long lhs = 0;
    long long rhs = 0;
    long long q_value = 0;
    std::uint64_t pairs_examined = 0;
};

// Number of components C of G - (S u T) with g(C) + e(C,T) odd.
inline int q_count(const Graph& host, mask_t s, mask_t t, const ParityFactorSpec& spec) {
    if (s & t) throw precondition_error("S and T must be disjoint");
    int q = 0;
    mask_t rem = host.vertex_mask() & ~(s | t);
    while (rem) {
        mask_t comp = bit(lowest_bit(rem));
        while (true) {
            mask_t grown = comp;
            for_each_bit(comp, [&](int v) { grown |= host.neighbors(v); });
            grown &= rem;
            if (grown == comp) break;
            comp = grown;
        }
        long long parity = 0;
        for_each_bit(comp, [&](int v) { parity += spec.g[v] + popcount(host.neighbors(v) & t); });
        if (parity & 1) ++q;
        rem &= ~comp;
    }
    return q;
}

// g(T) + q(S,T) <= f(S) + sum over T of deg(v) in G - S.
inline ConditionReport check_lovasz(const Graph& host, const ParityFactorSpec& spec,
                                    mask_t s, mask_t t) {
    if (s & t) throw precondition_error("S and T must be disjoint");
    ConditionReport r;
    r.q_value = q_count(host, s, t, spec);
    long long g_t = 0, f_s = 0, deg_sum = 0;
    for_each_bit(t, [&](int v) {
        g_t += spec.g[v];
        deg_sum += popcount(host.neighbors(v) & ~s);
    });
    for_each_bit(s, [&](int v) { f_s += spec.f[v]; });
    r.lhs = g_t + r.q_value;
    r.rhs = f_s + deg_sum;
    r.satisfied = r.lhs <= r.rhs;
    if (!r.satisfied) {
        r.violating_s = bits_of(s);
        r.violating_t = bits_of(t);
    }
    return r;
}

// Covering-spec wrapper. Also evaluates the rewritten inequality
// 2|T n A| + q(S,T) <= 2|S| + sum deg_{G-S}(v) and insists both routes
// agree; with g even on every vertex they are the same condition.
inline ConditionReport check_lovasz_covering(const BipartiteGraph& g, mask_t s, mask_t t) {
    const Graph host = to_host_graph(g);
    const ParityFactorSpec spec = covering_spec(g);
    ConditionReport r = check_lovasz(host, spec, s, t);
    long long deg_sum = 0;
    for_each_bit(t, [&](int v) { deg_sum += popcount(host.neighbors(v) & ~s); });
    const long long lhs2 = 2 * popcount(t & g.a_mask()) + r.q_value;
    const long long rhs2 = 2 * popcount(s) + deg_sum;
    if (lhs2 != r.lhs || rhs2 != r.rhs)
        throw contradiction_error("rewritten covering inequality disagrees with the generic one");
    return r;
}

namespace detail {

// Exhaustive scan over disjoint (S,T) pairs with T restricted to allowed_t.
// cheap_filter enables the covering-spec shortcut: q(S,T) is at most the
// number of vertices outside S u T with an odd number of neighbors in T
// (every odd component contains one), so most pairs are dismissed without
// a component decomposition. Only valid when g(C) is even for every
// component, which holds when all g-values are even.
inline ConditionReport lovasz_scan(const Graph& host, const ParityFactorSpec& spec,
                                   mask_t allowed_t, std::uint64_t cap_assignments,
                                   bool cheap_filter) {
    const int n = host.vertex_count();
    ConditionReport overall;
    std::uint64_t budget = cap_assignments;

    std::vector<int> t_list;
    const mask_t all = host.vertex_mask();
    for (mask_t t = 0;; ++t) {
        if ((t & allowed_t) == t) {
            t_list = bits_of(t);
            long long g_t = 0, deg_total = 0;
            mask_t nodd = 0;
            for (int v = 0; v < n; ++v) {
                const int dt = popcount(host.neighbors(v) & t);
                if (dt & 1) nodd |= bit(v);
            }
            for (int v : t_list) {
                g_t += spec.g[v];
                deg_total += host.degree(v);
            }
            const mask_t rest = all & ~t;
            mask_t s = rest;
            while (true) {
                if (budget == 0)
                    throw size_cap_error("violation scan exceeded the assignment cap");
                --budget;
                ++overall.pairs_examined;
                long long e_ts = 0;
                for (int v : t_list) e_ts += popcount(host.neighbors(v) & s);
                const long long rhs_f = cheap_filter ? 2 * popcount(s)
                                                     : [&] {
                                                           long long fs = 0;
                                                           for_each_bit(s, [&](int v) { fs += spec.f[v]; });
                                                           return fs;
                                                       }();
                const long long rhs = rhs_f + deg_total - e_ts;
                bool violated;
                long long q = -1;
                if (cheap_filter && g_t + popcount(nodd & ~s & ~t) <= rhs) {
                    violated = false;
                } else {
                    q = q_count(host, s, t, spec);
                    violated = g_t + q > rhs;
                }
                if (violated) {
                    ConditionReport r;
                    r.satisfied = false;
                    r.violating_s = bits_of(s);
                    r.violating_t = bits_of(t);
                    r.q_value = q;
                    r.lhs = g_t + q;
                    r.rhs = rhs;
                    r.pairs_examined = overall.pairs_examined;
                    return r;
                }
                if (s == 0) break;
                s = (s - 1) & rest;
            }
        }
        if (t == all) break;
    }
    return overall;
}

} // namespace detail

constexpr std::uint64_t kDefaultScanCap = 43046721ull; // 3^16

inline ConditionReport find_lovasz_violation(const Graph& host, const ParityFactorSpec& spec,
                                             std::uint64_t cap_assignments = kDefaultScanCap) {
    return detail::lovasz_scan(host, spec, host.vertex_mask(), cap_assignments, false);
}

// Covering-spec scan. T can be restricted to A: adding a B-vertex to T
// never helps a violation because g is 0 there and q grows by at most the
// vertex's remaining degree.
inline ConditionReport find_lovasz_violation_covering(const BipartiteGraph& g,
                                                      std::uint64_t cap_assignments = kDefaultScanCap) {
    const Graph host = to_host_graph(g);
    const ParityFactorSpec spec = covering_spec(g);
    return detail::lovasz_scan(host, spec, g.a_mask(), cap_assignments, true);
}

// |T| <= |S| + sum over components of floor(e(C,T)/2), T independent.
inline ConditionReport check_belck(const Graph& g, mask_t s, mask_t t) {
    if (s & t) throw precondition_error("S and T must be disjoint");
    bool independent = true;
    for_each_bit(t, [&](int v) {
        if (g.neighbors(v) & t) independent = false;
    });
    if (!independent) throw precondition_error("T must be an independent set");

    ConditionReport r;
    long long halves = 0;
    mask_t rem = g.vertex_mask() & ~(s | t);
    while (rem) {
        mask_t comp = bit(lowest_bit(rem));
        while (true) {
            mask_t grown = comp;
            for_each_bit(comp, [&](int v) { grown |= g.neighbors(v); });
            grown &= rem;
            if (grown == comp) break;
            comp = grown;
        }
        long long e_ct = 0;
        for_each_bit(comp, [&](int v) { e_ct += popcount(g.neighbors(v) & t); });
        halves += e_ct / 2;
        rem &= ~comp;
    }
    r.q_value = halves;
    r.lhs = popcount(t);
    r.rhs = popcount(s) + halves;
    r.satisfied = r.lhs <= r.rhs;
    if (!r.satisfied) {
        r.violating_s = bits_of(s);
        r.violating_t = bits_of(t);
    }
    return r;
}

inline ConditionReport find_belck_violation(const Graph& g,
                                            std::uint64_t cap_assignments = kDefaultScanCap) {
    const int n = g.vertex_count();
    ConditionReport overall;
    std::uint64_t budget = cap_assignments;
    for (mask_t t = 0;; ++t) {
        bool independent = true;
        for_each_bit(t, [&](int v) {
            if (g.neighbors(v) & t) independent = false;
        });
        if (independent) {
            const mask_t rest = g.vertex_mask() & ~t;
            mask_t s = rest;
            while (true) {
                if (budget == 0)
                    throw size_cap_error("violation scan exceeded the assignment cap");
                --budget;
                ++overall.pairs_examined;
                ConditionReport r = check_belck(g, s, t);
                if (!r.satisfied) {
                    r.pairs_examined = overall.pairs_examined;
                    return r;
                }
                if (s == 0) break;
                s = (s - 1) & rest;
            }
        }
        if (t == low_mask(n)) break;
    }
    return overall;
}

} // namespace dhp
