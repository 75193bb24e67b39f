// Acceptance suite: runs every corpus-level criterion and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "graphtk/characterization.hpp"
#include "graphtk/gallai_edmonds.hpp"
#include "graphtk/graph.hpp"
#include "graphtk/graphgen.hpp"
#include "graphtk/independence.hpp"
#include "graphtk/matching.hpp"
#include "oracles.hpp"

using graphtk::Graph;

namespace {

struct Tally {
    long graphs = 0;
    long agree_failures = 0;      // criterion 1/3: structural vs direct
    long thm1_failures = 0;       // criterion 5
    long thm2_failures = 0;       // criterion 4
    long sandwich_failures = 0;   // criterion 6
    long structure_failures = 0;  // criterion 7
    long roundtrip_failures = 0;  // criterion 12
};

void corpus_invariants(const Graph& g, Tally& t) {
    ++t.graphs;
    int n = g.vertex_count();
    int a = graphtk::alpha(g);
    int m = graphtk::mu(g);

    if (!(n / 2 + 1 <= a + m && a + m <= n && n <= a + 2 * m)) ++t.sandwich_failures;

    if (g.edge_count() > 0) {
        int dmin = g.degree(0), dmax = g.degree(0);
        for (int v = 1; v < n; ++v) {
            dmin = std::min(dmin, g.degree(v));
            dmax = std::max(dmax, g.degree(v));
        }
        if (dmin * a > dmax * m) ++t.thm1_failures;
    }

    auto dec = graphtk::decompose(g);
    if (!graphtk::verify_structure(g, dec).all() || !graphtk::mu_formula_check(g, dec))
        ++t.structure_failures;

    if (graphtk::parse_graph6(graphtk::to_graph6(g)) != g) ++t.roundtrip_failures;
}

// battery for connected regular corpus graphs (criteria 1, 3, 4, 6, 7, 12)
void regular_battery(const Graph& g, Tally& t) {
    corpus_invariants(g, t);
    auto rep = graphtk::check(g);
    if (!rep.agree) ++t.agree_failures;
    if (rep.direct_alpha > rep.direct_mu) ++t.thm2_failures;
}

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

} // namespace

int main() {
    Tally regular_tally;  // criteria 1-3 corpus
    Tally general_tally;  // criterion 5 corpus

    // --- criterion 1: exhaustive connected cubic graphs, n in {4,6,8,10}
    {
        long processed = 0;
        for (int n : {4, 6, 8, 10}) {
            graphtk::GenSpec spec;
            spec.n = n;
            spec.r = 3;
            graphtk::enumerate_regular(spec, [&](const Graph& g) {
                if (!graphtk::is_connected(g)) return;
                ++processed;
                regular_battery(g, regular_tally);
            });
        }
        report(1, regular_tally.agree_failures == 0,
               "Theorem 6 exhaustive cubic n<=10: " + std::to_string(processed) +
                   " graphs, " + std::to_string(regular_tally.agree_failures) +
                   " disagreements");
    }

    // --- criterion 2: cycles C3..C15
    {
        bool ok = true;
        for (int n = 3; n <= 15; ++n) {
            Graph cn = oracles::cycle(n);
            auto rep = graphtk::check(cn);
            regular_battery(cn, regular_tally);
            if (!rep.agree || !rep.direct_verdict) ok = false;
            if (rep.direct_alpha != n / 2 || rep.direct_mu != n / 2) ok = false;
            if (n % 2 == 0) {
                if (!rep.is_bipartite) ok = false;
            } else {
                if (rep.is_bipartite) ok = false;
                if (!(rep.cond_c_empty && rep.cond_a_forced && rep.cond_components_good))
                    ok = false;
            }
        }
        report(2, ok, "Theorem 6 on cycles C3..C15, alpha = mu = floor(n/2)");
    }

    // --- criterion 3: randomized regular corpora
    {
        long before = regular_tally.agree_failures;
        long processed = 0;
        const std::pair<int, int> cases[] = {{12, 3}, {14, 3}, {10, 4}, {12, 5}};
        for (auto [n, r] : cases) {
            graphtk::GenSpec spec;
            spec.n = n;
            spec.r = r;
            spec.mode = graphtk::GenSpec::Mode::Random;
            spec.count = 500;
            spec.seed = 1000 + static_cast<std::uint64_t>(n) * 16 + r;
            for (const auto& g : graphtk::random_regular(spec)) {
                if (!graphtk::is_connected(g)) continue;
                ++processed;
                regular_battery(g, regular_tally);
            }
        }
        long disagreements = regular_tally.agree_failures - before;
        report(3, disagreements == 0,
               "Theorem 6 randomized (12,3),(14,3),(10,4),(12,5): " +
                   std::to_string(processed) + " connected samples, " +
                   std::to_string(disagreements) + " disagreements");
    }

    // --- criterion 4: Theorem 2 on the regular corpus
    report(4, regular_tally.thm2_failures == 0,
           "alpha <= mu on all " + std::to_string(regular_tally.graphs) +
               " connected regular corpus graphs");

    // --- criterion 5: Theorem 1 on random general graphs
    {
        std::mt19937_64 rng(20260823);
        std::uniform_int_distribution<int> nd(2, 14);
        std::uniform_real_distribution<double> pd(0.05, 0.95);
        long generated = 0;
        while (generated < 1000) {
            Graph g = graphtk::random_gnp(nd(rng), pd(rng), rng);
            if (g.edge_count() == 0) continue;
            ++generated;
            corpus_invariants(g, general_tally);
        }
        report(5, general_tally.thm1_failures == 0,
               "delta*alpha <= Delta*mu on 1000 random general graphs, " +
                   std::to_string(general_tally.thm1_failures) + " violations");
    }

    // --- criterion 6: sandwich inequality over the whole corpus
    report(6, regular_tally.sandwich_failures + general_tally.sandwich_failures == 0,
           "floor(n/2)+1 <= alpha+mu <= n <= alpha+2mu on all " +
               std::to_string(regular_tally.graphs + general_tally.graphs) + " corpus graphs");

    // --- criterion 7: Gallai-Edmonds self-verification over the whole corpus
    report(7, regular_tally.structure_failures + general_tally.structure_failures == 0,
           "verify_structure all-true and mu formula exact on all corpus graphs");

    // --- criterion 8: matching oracle
    {
        long mismatches = 0;
        for (int n = 0; n <= 7; ++n)
            oracles::for_each_labeled_graph(n, [&](const Graph& g) {
                if (graphtk::mu(g) != oracles::brute_mu(g)) ++mismatches;
            });
        std::mt19937_64 rng(81);
        std::uniform_int_distribution<int> nd(1, 10);
        std::uniform_real_distribution<double> pd(0.1, 0.9);
        for (int t = 0; t < 200; ++t) {
            Graph g = graphtk::random_gnp(nd(rng), pd(rng), rng);
            if (graphtk::mu(g) != oracles::brute_mu(g)) ++mismatches;
        }
        report(8, mismatches == 0,
               "blossom mu == brute-force mu, exhaustive n<=7 plus 200 random n<=10");
    }

    // --- criterion 9: independence oracle
    {
        long mismatches = 0;
        for (int n = 0; n <= 7; ++n)
            oracles::for_each_labeled_graph(n, [&](const Graph& g) {
                if (graphtk::alpha(g) != oracles::brute_alpha(g)) ++mismatches;
            });
        std::mt19937_64 rng(83);
        std::uniform_int_distribution<int> nd(1, 16);
        std::uniform_real_distribution<double> pd(0.1, 0.9);
        for (int t = 0; t < 200; ++t) {
            Graph g = graphtk::random_gnp(nd(rng), pd(rng), rng);
            if (graphtk::alpha(g) != oracles::brute_alpha(g)) ++mismatches;
        }
        std::uniform_int_distribution<int> nd12(1, 12);
        for (int t = 0; t < 100; ++t) {
            Graph g = graphtk::random_gnp(nd12(rng), pd(rng), rng);
            auto sets = oracles::all_max_independent_sets(g);
            std::uint64_t intersection = ~0ull;
            for (std::uint64_t s : sets) intersection &= s;
            graphtk::VertexSet expected;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (intersection & (1ull << v)) expected.push_back(v);
            if (graphtk::forced_vertices(g) != expected) ++mismatches;
        }
        report(9, mismatches == 0,
               "branch-and-bound alpha == brute force (n<=16); forced vertices == "
               "enumeration (n<=12)");
    }

    // --- criterion 10: named instances
    {
        Graph pete = oracles::petersen();
        auto prep = graphtk::check(pete);
        bool ok = oracles::brute_mu(pete) == 5 && oracles::brute_alpha(pete) == 4 &&
                  prep.direct_mu == 5 && prep.direct_alpha == 4 && !prep.direct_verdict &&
                  !prep.structural_verdict && prep.agree;
        auto c5 = graphtk::check(oracles::cycle(5));
        ok = ok && c5.direct_verdict && c5.structural_verdict && c5.agree;
        auto k33 = graphtk::check(oracles::complete_bipartite(3, 3));
        ok = ok && k33.is_bipartite && k33.direct_alpha == 3 && k33.direct_mu == 3 &&
             k33.direct_verdict;
        auto k4 = graphtk::check(oracles::complete(4));
        ok = ok && k4.direct_alpha == 1 && k4.direct_mu == 2 && !k4.direct_verdict &&
             !k4.structural_verdict && k4.agree;
        report(10, ok, "Petersen (mu=5, alpha=4, false/false), C5, K33, K4");
    }

    // --- criterion 11: isomorphism-class counts of connected cubic graphs
    {
        const std::pair<int, long> expected[] = {{4, 1}, {6, 2}, {8, 5}};
        bool ok = true;
        for (auto [n, classes] : expected) {
            graphtk::GenSpec spec;
            spec.n = n;
            spec.r = 3;
            spec.dedup = true;
            long seen = 0;
            graphtk::enumerate_regular(spec, [&](const Graph& g) {
                if (graphtk::is_connected(g)) ++seen;
            });
            if (seen != classes) ok = false;
        }
        report(11, ok, "connected cubic isomorphism classes: 1, 2, 5 at n = 4, 6, 8");
    }

    // --- criterion 12: graph6 round-trip
    {
        bool named = graphtk::to_graph6(oracles::cycle(5)) == "Dhc" &&
                     graphtk::to_graph6(oracles::complete(4)) == "C~" &&
                     graphtk::parse_graph6("Dhc") == oracles::cycle(5) &&
                     graphtk::parse_graph6("C~") == oracles::complete(4);
        long rt = regular_tally.roundtrip_failures + general_tally.roundtrip_failures;
        report(12, named && rt == 0,
               "parse(serialize(g)) == g on all corpus graphs; Dhc and C~ exact");
    }

    return failures == 0 ? 0 : 1;
}
