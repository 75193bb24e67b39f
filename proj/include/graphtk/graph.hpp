#ifndef GRAPHTK_GRAPH_HPP
#define GRAPHTK_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphtk {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints, self-loops
    // or duplicate edges; the message names the offending pair.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Result of taking an induced subgraph: the subgraph plus both index maps.
// to_sub[host vertex] is the subgraph id or -1; to_host inverts it.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;
    std::vector<int> to_host;
};

// graph6 text format, short form for n <= 62 and the 3-byte extended
// form for 63 <= n <= 258047. parse throws std::invalid_argument on
// out-of-range characters, truncated input or trailing garbage.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

// Degree r when the graph is r-regular, nullopt otherwise.
std::optional<int> regularity(const Graph& g);

// Two-coloring; nullopt when an odd cycle exists. Vertices of edgeless
// components all land in the first side.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

InducedSubgraph induced(const Graph& g, const VertexSet& s);

// Number of edges with one endpoint in s and the other in t.
// Throws std::invalid_argument when the sets overlap.
long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

} // namespace graphtk

#endif
