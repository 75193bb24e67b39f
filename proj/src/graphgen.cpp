#include "graphtk/graphgen.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace graphtk {

namespace {

void check_regular_params(int n, int r) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    if (r < 0 || r >= n) throw std::invalid_argument("need 0 <= r < n");
    if ((static_cast<long>(n) * r) % 2 != 0)
        throw std::invalid_argument("parity violation: n*r is odd");
}

// Backtracking enumerator over the upper triangle with residual-degree
// pruning: vertex i picks its neighbors among j > i with spare degree.
class RegularEnumerator {
public:
    RegularEnumerator(int n, int r, bool dedup, const std::function<void(const Graph&)>& emit)
        : n_(n), r_(r), dedup_(dedup), emit_(emit), residual_(n, r) {}

    void run() { place_vertex(0); }

private:
    void place_vertex(int i) {
        if (i == n_) {
            Graph g = Graph::build(n_, edges_);
            if (dedup_) {
                if (!seen_.insert(canonical_form(g)).second) return;
            }
            emit_(g);
            return;
        }
        if (residual_[i] == 0) {
            place_vertex(i + 1);
            return;
        }
        choose(i, i + 1, residual_[i]);
    }

    void choose(int i, int from, int need) {
        if (need == 0) {
            int save = residual_[i];
            residual_[i] = 0;
            place_vertex(i + 1);
            residual_[i] = save;
            return;
        }
        int avail = 0;
        for (int j = from; j < n_; ++j)
            if (residual_[j] > 0) ++avail;
        if (avail < need) return;
        for (int j = from; j < n_; ++j) {
            if (residual_[j] == 0) continue;
            --residual_[j];
            edges_.emplace_back(i, j);
            choose(i, j + 1, need - 1);
            edges_.pop_back();
            ++residual_[j];
        }
    }

    int n_, r_;
    bool dedup_;
    const std::function<void(const Graph&)>& emit_;
    std::vector<int> residual_;
    std::vector<std::pair<int, int>> edges_;
    std::set<std::string> seen_;
};

} // namespace

void enumerate_regular(const GenSpec& spec, const std::function<void(const Graph&)>& emit) {
    check_regular_params(spec.n, spec.r);
    int cap = spec.r <= 2 ? 14 : (spec.r == 3 ? 12 : 10);
    if (spec.n > cap)
        throw std::length_error("enumerate_regular: n exceeds capacity for r=" +
                                std::to_string(spec.r));
    if (spec.dedup && spec.n > 10)
        throw std::length_error("enumerate_regular: dedup limited to n <= 10");
    RegularEnumerator(spec.n, spec.r, spec.dedup, emit).run();
}

std::vector<Graph> random_regular(const GenSpec& spec) {
    check_regular_params(spec.n, spec.r);
    if (spec.count < 1) throw std::invalid_argument("count must be >= 1");

    std::mt19937_64 rng(spec.seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(spec.n) * spec.r);
    std::vector<Graph> out;
    out.reserve(spec.count);

    for (int s = 0; s < spec.count; ++s) {
        bool done = false;
        for (int attempt = 0; attempt < 10000 && !done; ++attempt) {
            stubs.clear();
            for (int v = 0; v < spec.n; ++v)
                for (int k = 0; k < spec.r; ++k) stubs.push_back(v);
            std::shuffle(stubs.begin(), stubs.end(), rng);

            std::set<std::pair<int, int>> edge_set;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                int u = stubs[i], v = stubs[i + 1];
                if (u == v) {
                    ok = false;
                    break;
                }
                if (u > v) std::swap(u, v);
                if (!edge_set.emplace(u, v).second) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            out.push_back(Graph::build(
                spec.n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end())));
            done = true;
        }
        if (!done)
            throw std::runtime_error("random_regular: rejection budget exhausted for n=" +
                                     std::to_string(spec.n) + " r=" + std::to_string(spec.r));
    }
    return out;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: bad parameters");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

std::vector<IngestItem> ingest(std::istream& in) {
    std::vector<IngestItem> items;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        IngestItem item;
        item.line = lineno;
        item.text = line;
        try {
            item.graph = parse_graph6(line);
        } catch (const std::exception& e) {
            item.error = e.what();
        }
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<IngestItem> ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return ingest(in);
}

namespace {

// Prefix-pruned search for the permutation minimizing the upper-triangle
// bit string (column-major, same order as graph6).
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.vertex_count()) {
        adj_.assign(n_, std::vector<char>(n_, 0));
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbors(v)) adj_[v][u] = 1;
        perm_.resize(n_);
        used_.assign(n_, false);
        cur_.resize(n_ * (n_ - 1) / 2);
        best_.assign(cur_.size(), '2'); // lexicographically above any bit string
    }

    std::string run() {
        place(0, false);
        return std::string(best_.begin(), best_.end());
    }

private:
    void place(int k, bool strictly_less) {
        if (k == n_) {
            best_ = cur_;
            return;
        }
        int offset = k * (k - 1) / 2;
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            bool less = strictly_less;
            bool prune = false;
            for (int j = 0; j < k; ++j) {
                char bit = adj_[perm_[j]][v] ? '1' : '0';
                cur_[offset + j] = bit;
                if (!less) {
                    if (bit > best_[offset + j]) {
                        prune = true;
                        break;
                    }
                    if (bit < best_[offset + j]) less = true;
                }
            }
            if (prune) continue;
            perm_[k] = v;
            used_[v] = true;
            place(k + 1, less);
            used_[v] = false;
        }
    }

    int n_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> perm_;
    std::vector<char> used_;
    std::vector<char> cur_, best_;
};

} // namespace

std::string canonical_form(const Graph& g) {
    if (g.vertex_count() > 10)
        throw std::length_error("canonical_form: brute force limited to n <= 10");
    return CanonicalSearch(g).run();
}

} // namespace graphtk
