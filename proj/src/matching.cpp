#include "graphtk/matching.hpp"

#include <algorithm>
#include <numeric>

namespace graphtk {

namespace {

// Contracted-blossom augmenting search, O(n*m) per augmentation.
// `skip`, when >= 0, excludes that vertex from the graph entirely.
class BlossomSolver {
public:
    BlossomSolver(const Graph& g, int skip) : g_(g), n_(g.vertex_count()), skip_(skip) {
        match_.assign(n_, -1);
        parent_.assign(n_, -1);
        base_.resize(n_);
        used_.assign(n_, false);
        in_blossom_.assign(n_, false);
        lca_mark_.assign(n_, false);
    }

    Matching run() {
        greedy_init();
        for (int v = 0; v < n_; ++v) {
            if (v == skip_ || match_[v] != -1) continue;
            int leaf = find_augmenting_path(v);
            if (leaf != -1) augment(leaf);
        }
        Matching result;
        result.mate = match_;
        for (int v = 0; v < n_; ++v)
            if (match_[v] != -1) ++result.size;
        result.size /= 2;
        return result;
    }

private:
    void greedy_init() {
        for (int v = 0; v < n_; ++v) {
            if (v == skip_ || match_[v] != -1) continue;
            for (int u : g_.neighbors(v)) {
                if (u == skip_ || match_[u] != -1) continue;
                match_[v] = u;
                match_[u] = v;
                break;
            }
        }
    }

    int lca(int a, int b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), false);
        int v = a;
        while (true) {
            v = base_[v];
            lca_mark_[v] = true;
            if (match_[v] == -1) break;
            v = parent_[match_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (lca_mark_[v]) return v;
            v = parent_[match_[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        queue_.assign(1, root);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            for (int to : g_.neighbors(v)) {
                if (to == skip_) continue;
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!used_[i]) {
                            used_[i] = true;
                            queue_.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    queue_.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    int skip_;
    std::vector<int> match_, parent_, base_, queue_;
    std::vector<char> used_, in_blossom_, lca_mark_;
};

} // namespace

Matching maximum_matching(const Graph& g) {
    return BlossomSolver(g, -1).run();
}

int mu(const Graph& g) {
    return maximum_matching(g).size;
}

int mu_excluding(const Graph& g, int skip) {
    return BlossomSolver(g, skip).run().size;
}

bool has_perfect_matching(const Graph& g) {
    return 2 * mu(g) == g.vertex_count();
}

bool is_factor_critical(const Graph& g) {
    int n = g.vertex_count();
    if (n % 2 == 0) return false;
    for (int v = 0; v < n; ++v)
        if (2 * mu_excluding(g, v) != n - 1) return false;
    return true;
}

} // namespace graphtk
