#ifndef GRAPHTK_GALLAI_EDMONDS_HPP
#define GRAPHTK_GALLAI_EDMONDS_HPP

#include <vector>

#include "graphtk/graph.hpp"

namespace graphtk {

// Canonical partition (D, A, C): D holds the vertices missed by at least
// one maximum matching, A = N(D) \ D, C = the rest. Components partition
// D into connected components of G[D].
struct GEDecomposition {
    VertexSet d, a, c;
    std::vector<VertexSet> components;
    std::vector<char> trivial_flags;
};

GEDecomposition decompose(const Graph& g);

// One flag per structure-theorem clause; all five hold on every graph,
// so any false signals a defect.
struct StructureReport {
    bool components_factor_critical = false;
    bool c_has_perfect_matching = false;
    bool matching_respects_parts = false;
    bool has_positive_surplus = false;
    bool no_edges_c_to_d = false;

    bool all() const {
        return components_factor_critical && c_has_perfect_matching &&
               matching_respects_parts && has_positive_surplus && no_edges_c_to_d;
    }
};

StructureReport verify_structure(const Graph& g, const GEDecomposition& d);

// Contract each D-component to a single vertex and test |N(X)| > |X| for
// every nonempty X of A by subset enumeration. Throws std::length_error
// when |A| > 25.
bool positive_surplus(const Graph& g, const GEDecomposition& d);

// mu(G) = |C|/2 + |A| + sum_i (|D_i| - 1)/2, checked exactly.
bool mu_formula_check(const Graph& g, const GEDecomposition& d);

} // namespace graphtk

#endif
