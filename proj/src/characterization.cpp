#include "graphtk/characterization.hpp"

#include <stdexcept>

#include "graphtk/independence.hpp"
#include "graphtk/matching.hpp"

namespace graphtk {

namespace {

int check_preconditions(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected");
    auto r = regularity(g);
    if (!r) throw std::invalid_argument("not regular");
    if (*r == 0) throw std::invalid_argument("degree zero");
    return *r;
}

} // namespace

ComponentDiag is_good_component(const Graph& g, const GEDecomposition& d, int i) {
    const VertexSet& comp = d.components.at(i);
    if (comp.size() < 3)
        throw std::invalid_argument("is_good_component: component is trivial");

    ComponentDiag diag;
    diag.index = i;
    diag.half = (static_cast<int>(comp.size()) - 1) / 2;
    diag.alpha_comp = alpha(induced(g, comp).graph);

    std::vector<char> in_a(g.vertex_count(), false);
    for (int v : d.a) in_a[v] = true;
    VertexSet interior;
    for (int v : comp) {
        bool touches_a = false;
        for (int u : g.neighbors(v))
            if (in_a[u]) {
                touches_a = true;
                break;
            }
        if (!touches_a) interior.push_back(v);
    }
    diag.restricted_alpha = alpha(induced(g, interior).graph);
    diag.good = diag.alpha_comp == diag.half && diag.restricted_alpha == diag.half;
    return diag;
}

CharacterizationReport structural_verdict(const Graph& g) {
    CharacterizationReport rep;
    rep.n = g.vertex_count();
    rep.r = check_preconditions(g);
    rep.has_pm = has_perfect_matching(g);
    rep.is_bipartite = bipartition(g).has_value();
    if (rep.is_bipartite) {
        rep.structural_verdict = true;
        return rep;
    }

    GEDecomposition dec = decompose(g);
    rep.cond_c_empty = dec.c.empty();

    rep.cond_a_forced = true;
    for (int a : dec.a)
        if (!in_every_max_is(g, a)) {
            rep.cond_a_forced = false;
            break;
        }

    rep.cond_components_good = true;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        if (dec.trivial_flags[i]) {
            ComponentDiag diag;
            diag.index = static_cast<int>(i);
            diag.trivial = true;
            rep.per_component.push_back(diag);
            continue;
        }
        ComponentDiag diag = is_good_component(g, dec, static_cast<int>(i));
        if (!diag.good) rep.cond_components_good = false;
        rep.per_component.push_back(diag);
    }

    rep.structural_verdict = rep.cond_c_empty && rep.cond_a_forced && rep.cond_components_good;
    return rep;
}

std::tuple<int, int, bool> direct_verdict(const Graph& g) {
    check_preconditions(g);
    int a = alpha(g);
    int m = mu(g);
    return {a, m, a == m};
}

CharacterizationReport check(const Graph& g) {
    CharacterizationReport rep = structural_verdict(g);
    auto [a, m, eq] = direct_verdict(g);
    rep.direct_alpha = a;
    rep.direct_mu = m;
    rep.direct_verdict = eq;
    rep.agree = rep.structural_verdict == rep.direct_verdict;
    return rep;
}

EqualCaseReport equal_case_invariants(const Graph& g) {
    check_preconditions(g);
    if (has_perfect_matching(g))
        throw std::invalid_argument("equal_case_invariants: graph has a perfect matching");
    int a = alpha(g);
    if (a != mu(g))
        throw std::invalid_argument("equal_case_invariants: alpha != mu");

    GEDecomposition dec = decompose(g);
    EqualCaseReport rep;
    rep.c_empty = dec.c.empty();

    rep.a_forced = true;
    for (int v : dec.a)
        if (!in_every_max_is(g, v)) {
            rep.a_forced = false;
            break;
        }

    long sum = 0;
    for (const auto& comp : dec.components)
        if (comp.size() >= 3) sum += static_cast<long>(comp.size()) - 1;
    rep.alpha_formula = a == static_cast<long>(dec.a.size()) + sum / 2;
    return rep;
}

} // namespace graphtk
