#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dhp/bipartite_graph.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/dhp_check.hpp"
#include "dhp/errors.hpp"
#include "dhp/instance_io.hpp"
#include "dhp/rainbow_cycle.hpp"
#include "dhp/sampling.hpp"
#include "dhp/two_factor.hpp"
#include "dhp/validate.hpp"

namespace dhp {

enum class SearchMode { sample, sweep };

struct SearchConfig {
    SearchMode mode = SearchMode::sample;
    int samples = 100; // sample mode only
    int a_count = 6;
    int b_count = 7; // per-instance |B| when sampling, largest |B| when sweeping
    DegreeProfile profile = DegreeProfile::uniform;
    std::uint64_t seed = 0;
    int workers = 1;
    int cycle_cap = 14;
    int max_attempts = 5000;
};

struct CounterexampleRecord {
    int index = 0;
    std::string instance_text;
    std::uint64_t nodes_expanded = 0;
    bool reverified = false; // independent re-checks agreed with the miss
};

struct SearchReport {
    int instances_tested = 0;
    long long sampler_attempts = 0; // sample mode only
    int dhp_holding = 0;
    int two_factors_found = 0;
    int cycles_found = 0;
    std::vector<CounterexampleRecord> counterexamples;
    double elapsed_seconds = 0; // informational; kept out of the canonical document
};

namespace detail {

inline std::uint64_t instance_seed(std::uint64_t base, int index) {
    SplitMix64 mix(base + 0x632be59bd9b4e019ull * (std::uint64_t)(index + 1));
    return mix.next();
}

struct InstanceOutcome {
    int attempts = 0;
    bool dhp = true;
    bool factor_found = false;
    bool cycle_found = false;
    bool counterexample = false;
    std::string instance_text;
    std::uint64_t nodes = 0;
    bool reverified = false;
};

// The conjecture pipeline on one verified instance: demand the guaranteed
// covering 2-factor, then search for the covering (rainbow) cycle. A miss
// by the exact backtracker is re-verified before being called a candidate.
inline InstanceOutcome run_pipeline(const BipartiteGraph& g, int cycle_cap,
                                    InstanceMetadata meta) {
    InstanceOutcome out;
    auto factor = find_covering_two_factor(g);
    if (!factor)
        throw contradiction_error("double Hall instance without a covering 2-factor");
    const std::string bad_factor = validate_covering_two_factor(g, *factor);
    if (!bad_factor.empty())
        throw contradiction_error("invalid covering 2-factor: " + bad_factor);
    out.factor_found = true;

    const BipartiteGraph stripped = strip_degree_le1(g);
    const ColoredMultigraph m = to_colored_multigraph(stripped);
    const RainbowCycleSearch rc = find_rainbow_hamiltonian_cycle(m, cycle_cap);
    out.nodes = rc.nodes_expanded;
    if (rc.cycle) {
        const std::string bad = validate_rainbow_hamiltonian_cycle(m, *rc.cycle);
        if (!bad.empty()) throw contradiction_error("invalid rainbow cycle: " + bad);
        out.cycle_found = true;
        return out;
    }
    if (!rc.exhaustive)
        throw contradiction_error("cycle search neither found nor refuted");

    // counterexample candidate: re-run the double Hall check without
    // pruning, and cross-examine with the permutation oracle when feasible
    if (!check_dhp(g, /*prune=*/false).holds)
        throw contradiction_error("instance lost the double Hall property on re-check");
    if (m.vertex_count <= 7) {
        if (find_rainbow_cycle_by_permutations(m))
            throw contradiction_error("backtracker missed a cycle the oracle found");
    }
    out.counterexample = true;
    out.reverified = true;
    out.instance_text = emit_instance(g, meta);
    return out;
}

inline InstanceOutcome run_one_sample(const SearchConfig& cfg, int index) {
    SampleConfig sc{cfg.a_count, cfg.b_count, cfg.profile,
                    instance_seed(cfg.seed, index), cfg.max_attempts};
    const SampleResult sample = sample_dhp(sc);
    InstanceMetadata meta;
    meta.entries["seed"] = std::to_string(sc.seed);
    meta.entries["generator"] = profile_name(cfg.profile);
    InstanceOutcome out = run_pipeline(sample.graph, cfg.cycle_cap, std::move(meta));
    out.attempts = sample.attempts;
    return out;
}

// Every instance with the given sides, one representative per multiset of
// B-neighborhoods. Degree <= 1 neighborhoods are excluded outright: they
// cannot affect the property, so each canonical form stands for all its
// paddings too.
template <typename Fn>
void for_each_canonical_instance(int a_count, int b_count, Fn&& fn) {
    std::vector<mask_t> masks;
    for (mask_t m = 0; m < (mask_t{1} << a_count); ++m)
        if (popcount(m) >= 2) masks.push_back(m);
    std::vector<mask_t> chosen(b_count);
    std::function<void(int, std::size_t)> rec = [&](int slot, std::size_t from) {
        if (slot == b_count) {
            fn(BipartiteGraph(a_count, chosen));
            return;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
            chosen[slot] = masks[i];
            rec(slot + 1, i);
        }
    };
    rec(0, 0);
}

} // namespace detail

inline SearchReport search_counterexamples(const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;

    if (cfg.mode == SearchMode::sweep) {
        // exhaustive sweep over canonical instances with |B| up to b_count
        if (cfg.a_count > 6)
            throw size_cap_error("sweep mode is exhaustive; |A| capped at 6");
        int index = 0;
        for (int b = cfg.a_count; b <= cfg.b_count; ++b) {
            detail::for_each_canonical_instance(cfg.a_count, b, [&](const BipartiteGraph& g) {
                ++rep.instances_tested;
                if (!check_dhp(g).holds) return;
                ++rep.dhp_holding;
                InstanceMetadata meta;
                meta.entries["generator"] = "sweep";
                const detail::InstanceOutcome o =
                    detail::run_pipeline(g, cfg.cycle_cap, std::move(meta));
                if (o.factor_found) ++rep.two_factors_found;
                if (o.cycle_found) ++rep.cycles_found;
                if (o.counterexample)
                    rep.counterexamples.push_back(
                        CounterexampleRecord{index, o.instance_text, o.nodes, o.reverified});
                ++index;
            });
        }
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    std::vector<detail::InstanceOutcome> outcomes(cfg.samples);
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (int i = 0; i < cfg.samples; ++i) outcomes[i] = detail::run_one_sample(cfg, i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::string> failures(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                while (true) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.samples) return;
                    try {
                        outcomes[i] = detail::run_one_sample(cfg, i);
                    } catch (const std::exception& e) {
                        failures[w] = e.what();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& f : failures)
            if (!f.empty()) throw contradiction_error(f);
    }

    rep.instances_tested = cfg.samples;
    for (int i = 0; i < cfg.samples; ++i) {
        const auto& o = outcomes[i];
        rep.sampler_attempts += o.attempts;
        ++rep.dhp_holding;
        if (o.factor_found) ++rep.two_factors_found;
        if (o.cycle_found) ++rep.cycles_found;
        if (o.counterexample)
            rep.counterexamples.push_back(
                CounterexampleRecord{i, o.instance_text, o.nodes, o.reverified});
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Canonical report document: stable field order, no timing.
inline std::string format_search_report(const SearchReport& rep, const SearchConfig& cfg) {
    std::ostringstream out;
    out << "dhp-report v1\n";
    out << "command search\n";
    if (cfg.mode == SearchMode::sweep) {
        out << "mode sweep\n";
        out << "a-count " << cfg.a_count << "\n";
        out << "b-count-max " << cfg.b_count << "\n";
    } else {
        out << "mode sample\n";
        out << "samples " << cfg.samples << "\n";
        out << "a-count " << cfg.a_count << "\n";
        out << "b-count " << cfg.b_count << "\n";
        out << "profile " << profile_name(cfg.profile) << "\n";
        out << "seed " << cfg.seed << "\n";
    }
    out << "instances-tested " << rep.instances_tested << "\n";
    if (cfg.mode == SearchMode::sample)
        out << "sampler-attempts " << rep.sampler_attempts << "\n";
    out << "dhp-holding " << rep.dhp_holding << "\n";
    out << "two-factors-found " << rep.two_factors_found << "\n";
    out << "cycles-found " << rep.cycles_found << "\n";
    out << "counterexamples " << rep.counterexamples.size() << "\n";
    for (const auto& ce : rep.counterexamples) {
        out << "counterexample-index " << ce.index << "\n";
        out << "counterexample-nodes-expanded " << ce.nodes_expanded << "\n";
        out << "counterexample-reverified " << (ce.reverified ? "true" : "false") << "\n";
        std::istringstream lines(ce.instance_text);
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
    }
    return out.str();
}

} // namespace dhp
