#include "graphtk/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace graphtk {

namespace {

// Exact solver on one connected component, bitmask representation.
class MisSolver {
public:
    explicit MisSolver(const std::vector<std::uint64_t>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

    // Returns (alpha, first optimal set encountered).
    std::pair<int, std::uint64_t> solve() {
        best_ = -1;
        best_set_ = 0;
        std::uint64_t all = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
        search(all, 0, 0);
        return {best_, best_set_};
    }

private:
    int clique_cover_bound(std::uint64_t cand) const {
        int cliques = 0;
        while (cand) {
            std::uint64_t rest = cand;
            std::uint64_t clique_adj = ~0ull;
            while (rest) {
                int v = std::countr_zero(rest);
                clique_adj &= adj_[v];
                cand &= ~(1ull << v);
                rest &= ~(1ull << v);
                rest &= clique_adj;
            }
            ++cliques;
        }
        return cliques;
    }

    void search(std::uint64_t cand, std::uint64_t chosen, int size) {
        if (cand == 0) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + clique_cover_bound(cand) <= best_) return;

        // branch vertex: maximum degree within cand, lowest id on ties
        int pick = -1, pick_deg = -1;
        std::uint64_t rest = cand;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj_[v] & cand);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        std::uint64_t bit = 1ull << pick;
        search(cand & ~adj_[pick] & ~bit, chosen | bit, size + 1);
        search(cand & ~bit, chosen, size);
    }

    const std::vector<std::uint64_t>& adj_;
    int n_;
    int best_ = -1;
    std::uint64_t best_set_ = 0;
};

// alpha with an optional excluded vertex; optionally collects a witness.
IndependenceResult solve(const Graph& g, int skip, bool want_witness) {
    int n = g.vertex_count();
    IndependenceResult result;
    std::vector<int> comp(n, -1);
    std::vector<int> stack, members;
    for (int s = 0; s < n; ++s) {
        if (s == skip || comp[s] != -1) continue;
        members.assign(1, s);
        stack.assign(1, s);
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (u == skip || comp[u] != -1) continue;
                comp[u] = s;
                members.push_back(u);
                stack.push_back(u);
            }
        }
        int k = static_cast<int>(members.size());
        if (k > 64)
            throw std::length_error("independent-set solver: component exceeds 64 vertices");
        std::sort(members.begin(), members.end());
        std::vector<int> local(n, -1);
        for (int i = 0; i < k; ++i) local[members[i]] = i;
        std::vector<std::uint64_t> adj(k, 0);
        for (int i = 0; i < k; ++i)
            for (int u : g.neighbors(members[i]))
                if (u != skip && local[u] != -1) adj[i] |= 1ull << local[u];
        auto [a, set] = MisSolver(adj).solve();
        result.alpha += a;
        if (want_witness)
            for (int i = 0; i < k; ++i)
                if (set & (1ull << i)) result.witness.push_back(members[i]);
    }
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

} // namespace

IndependenceResult max_independent_set(const Graph& g) {
    return solve(g, -1, true);
}

int alpha(const Graph& g) {
    return solve(g, -1, false).alpha;
}

bool in_every_max_is(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("in_every_max_is: vertex out of range");
    return solve(g, v, false).alpha == alpha(g) - 1;
}

VertexSet forced_vertices(const Graph& g) {
    int a = alpha(g);
    VertexSet forced;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (solve(g, v, false).alpha == a - 1) forced.push_back(v);
    return forced;
}

} // namespace graphtk
