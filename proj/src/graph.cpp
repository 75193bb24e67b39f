#include "graphtk/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphtk {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw std::invalid_argument("duplicate edge: (" + std::to_string(v) + "," +
                                        std::to_string(*dup) + ")");
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

int g6_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kG6Lo || c > kG6Hi)
        throw std::invalid_argument("graph6: character out of range at position " +
                                    std::to_string(pos));
    return c - kG6Lo;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: n > 258047 not supported");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | g6_byte(text, pos);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical extended order");
    } else {
        n = g6_byte(text, 0);
        pos = 1;
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) != nbytes) {
        if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
            throw std::invalid_argument("graph6: truncated bit stream");
        throw std::invalid_argument("graph6: trailing garbage");
    }

    std::vector<std::pair<int, int>> edges;
    int cur = 0, mask = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (mask == 0) {
                cur = g6_byte(text, pos++);
                mask = 0x20;
            }
            if (cur & mask) edges.emplace_back(i, j);
            mask >>= 1;
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw std::invalid_argument("graph6: n > 258047 not supported");
    }
    int cur = 0, nbit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbit == 6) {
                out.push_back(static_cast<char>(cur + kG6Lo));
                cur = 0;
                nbit = 0;
            }
        }
    }
    if (nbit > 0) out.push_back(static_cast<char>((cur << (6 - nbit)) + kG6Lo));
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

std::optional<int> regularity(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    int r = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet side0, side1;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? side0 : side1).push_back(v);
    return std::make_pair(std::move(side0), std::move(side1));
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    int n = g.vertex_count();
    InducedSubgraph res;
    res.to_sub.assign(n, -1);
    res.to_host = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw std::invalid_argument("induced: vertex out of range");
        res.to_sub[s[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (u > v && res.to_sub[u] != -1)
                edges.emplace_back(res.to_sub[v], res.to_sub[u]);
    res.graph = Graph::build(static_cast<int>(s.size()), edges);
    return res;
}

long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    std::vector<char> in_s(g.vertex_count(), false), in_t(g.vertex_count(), false);
    for (int v : s) in_s[v] = true;
    for (int v : t) {
        if (in_s[v]) throw std::invalid_argument("edges_between: sets overlap");
        in_t[v] = true;
    }
    long count = 0;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in_t[u]) ++count;
    return count;
}

} // namespace graphtk
