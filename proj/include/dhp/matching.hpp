#pragma once

#include <algorithm>
#include <queue>
#include <vector>

namespace dhp {

// Maximum cardinality matching in a general graph: blossom-shrinking
// augmenting BFS in the style of "Paths, Trees, and Flowers". Blossoms are
// contracted by rebasing vertices onto the stem vertex; parents are rewired
// while marking the blossom, so no explicit expansion step is needed.
// Roughly O(V^3), plenty for the gadget graphs built here.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adjacency)
        : n_((int)adjacency.size()),
          adj_(std::move(adjacency)),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, 0),
          blossom_(n_, 0) {}

    // Returns the number of matched pairs.
    int solve() {
        greedy_seed();
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            int u = find_augmenting_path(v);
            while (u >= 0) {
                int pv = parent_[u];
                int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        int pairs = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) ++pairs;
        return pairs;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    void greedy_seed() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            for (int to : adj_[v]) {
                if (match_[to] < 0) {
                    match_[v] = to;
                    match_[to] = v;
                    break;
                }
            }
        }
    }

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        int x = a;
        while (true) {
            x = base_[x];
            seen[x] = 1;
            if (match_[x] < 0) break;
            x = parent_[match_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (seen[y]) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[v] != stem) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // BFS from a free root; returns the free endpoint of an augmenting path
    // or -1. parent_ holds the back edges of the alternating tree.
    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    // even-even edge: contract the blossom at the stem
                    int stem = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = stem;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace dhp
