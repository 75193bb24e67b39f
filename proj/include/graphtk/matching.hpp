#ifndef GRAPHTK_MATCHING_HPP
#define GRAPHTK_MATCHING_HPP

#include <vector>

#include "graphtk/graph.hpp"

namespace graphtk {

// Maximum matching as a mate table; mate[v] == -1 for exposed vertices.
struct Matching {
    std::vector<int> mate;
    int size = 0;
};

// Blossom algorithm (odd-cycle contraction). Deterministic: vertices are
// scanned in ascending id order, neighbors in sorted order.
Matching maximum_matching(const Graph& g);

int mu(const Graph& g);

// Matching number of G - v, computed without materializing the subgraph.
int mu_excluding(const Graph& g, int skip);

bool has_perfect_matching(const Graph& g);

// True iff |V| is odd and G - v has a perfect matching for every v.
bool is_factor_critical(const Graph& g);

} // namespace graphtk

#endif
