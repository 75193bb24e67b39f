#ifndef GRAPHTK_INDEPENDENCE_HPP
#define GRAPHTK_INDEPENDENCE_HPP

#include <optional>

#include "graphtk/graph.hpp"

namespace graphtk {

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
    std::optional<VertexSet> forced;
};

// Exact maximum independent set by branch and bound: branch on a
// maximum-degree vertex (lowest id on ties), prune with a greedy clique
// cover bound, solve connected components independently. Components are
// limited to 64 vertices (throws std::length_error beyond).
IndependenceResult max_independent_set(const Graph& g);

int alpha(const Graph& g);

// v belongs to every maximum independent set iff alpha(G - v) = alpha(G) - 1.
bool in_every_max_is(const Graph& g, int v);

// All vertices belonging to every maximum independent set.
VertexSet forced_vertices(const Graph& g);

} // namespace graphtk

#endif
