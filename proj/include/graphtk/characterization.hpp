#ifndef GRAPHTK_CHARACTERIZATION_HPP
#define GRAPHTK_CHARACTERIZATION_HPP

#include <tuple>
#include <vector>

#include "graphtk/gallai_edmonds.hpp"
#include "graphtk/graph.hpp"

namespace graphtk {

// Per D-component diagnostics for the structural test. A nontrivial
// component is "good" when alpha(D_i) = (|D_i|-1)/2 and this value is
// still attained after dropping the vertices with a neighbor in A.
struct ComponentDiag {
    int index = 0;
    bool trivial = false;
    bool good = false;
    int alpha_comp = 0;
    int half = 0;
    int restricted_alpha = 0;
};

struct CharacterizationReport {
    int n = 0;
    int r = 0;
    bool is_bipartite = false;
    bool has_pm = false;
    bool cond_c_empty = false;       // condition (i)
    bool cond_a_forced = false;      // condition (ii)
    bool cond_components_good = false; // condition (iii)
    std::vector<ComponentDiag> per_component;
    bool structural_verdict = false;
    int direct_alpha = -1;
    int direct_mu = -1;
    bool direct_verdict = false;
    bool agree = false;
};

// Throws std::invalid_argument when component i is trivial.
ComponentDiag is_good_component(const Graph& g, const GEDecomposition& d, int i);

// Structural side only (direct fields left unfilled). Preconditions:
// connected, r-regular with r >= 1; violations throw std::invalid_argument
// with distinct messages ("disconnected", "not regular", "degree zero").
CharacterizationReport structural_verdict(const Graph& g);

// (alpha, mu, alpha == mu); same preconditions.
std::tuple<int, int, bool> direct_verdict(const Graph& g);

// Both sides plus the agreement flag. agree == false is a defect signal.
CharacterizationReport check(const Graph& g);

struct EqualCaseReport {
    bool a_forced = false;
    bool c_empty = false;
    bool alpha_formula = false;

    bool all() const { return a_forced && c_empty && alpha_formula; }
};

// Preconditions: connected regular, no perfect matching, alpha == mu.
EqualCaseReport equal_case_invariants(const Graph& g);

} // namespace graphtk

#endif
