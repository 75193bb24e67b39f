// Command-line surface: per-graph queries, decomposition dumps and the
// verification harness. One JSON record per line on stdout,
// diagnostics on stderr. Exit codes: 0 clean, 1 property disagreement,
// 2 input or capacity error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphtk/characterization.hpp"
#include "graphtk/gallai_edmonds.hpp"
#include "graphtk/graph.hpp"
#include "graphtk/graphgen.hpp"
#include "graphtk/independence.hpp"
#include "graphtk/matching.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        os = &file;
    }
    void emit(const json& j) { *os << j.dump() << "\n"; }
};

std::vector<graphtk::IngestItem> read_input(const std::string& in_path) {
    if (in_path.empty()) return graphtk::ingest(std::cin);
    return graphtk::ingest_file(in_path);
}

json decomposition_json(const graphtk::GEDecomposition& dec) {
    json j;
    j["d"] = dec.d;
    j["a"] = dec.a;
    j["c"] = dec.c;
    j["components"] = dec.components;
    j["trivial"] = json::array();
    for (char f : dec.trivial_flags) j["trivial"].push_back(static_cast<bool>(f));
    return j;
}

json report_json(const graphtk::CharacterizationReport& rep) {
    json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["bipartite"] = rep.is_bipartite;
    j["has_pm"] = rep.has_pm;
    j["cond_c_empty"] = rep.cond_c_empty;
    j["cond_a_forced"] = rep.cond_a_forced;
    j["cond_components_good"] = rep.cond_components_good;
    j["components"] = json::array();
    for (const auto& c : rep.per_component) {
        json cj;
        cj["index"] = c.index;
        cj["trivial"] = c.trivial;
        if (!c.trivial) {
            cj["good"] = c.good;
            cj["alpha"] = c.alpha_comp;
            cj["half"] = c.half;
            cj["restricted_alpha"] = c.restricted_alpha;
        }
        j["components"].push_back(cj);
    }
    j["structural"] = rep.structural_verdict;
    j["alpha"] = rep.direct_alpha;
    j["mu"] = rep.direct_mu;
    j["direct"] = rep.direct_verdict;
    j["agree"] = rep.agree;
    return j;
}

// Per-graph battery for verify mode: structural-vs-direct agreement plus
// the structure self-checks and the inequality invariants.
bool verify_one(const graphtk::Graph& g, json& failure) {
    graphtk::CharacterizationReport rep = graphtk::check(g);
    graphtk::GEDecomposition dec = graphtk::decompose(g);
    graphtk::StructureReport sr = graphtk::verify_structure(g, dec);
    bool mu_formula = graphtk::mu_formula_check(g, dec);

    int n = g.vertex_count();
    int a = rep.direct_alpha, m = rep.direct_mu;
    bool thm2 = a <= m;
    bool sandwich = (n / 2 + 1 <= a + m) && (a + m <= n) && (n <= a + 2 * m);

    bool ok = rep.agree && sr.all() && mu_formula && thm2 && sandwich;
    if (!ok) {
        failure = report_json(rep);
        failure["structure_ok"] = sr.all();
        failure["mu_formula_ok"] = mu_formula;
        failure["thm2_ok"] = thm2;
        failure["sandwich_ok"] = sandwich;
    }
    return ok;
}

int run_per_graph(const std::string& cmd, const std::string& in_path, Out& out) {
    bool any_error = false;
    bool any_disagree = false;
    for (const auto& item : read_input(in_path)) {
        json rec;
        rec["index"] = item.line;
        rec["graph6"] = item.text;
        if (!item.graph) {
            rec["error"] = item.error;
            std::cerr << "line " << item.line << ": " << item.error << "\n";
            any_error = true;
            out.emit(rec);
            continue;
        }
        const graphtk::Graph& g = *item.graph;
        try {
            if (cmd == "alpha") {
                rec["alpha"] = graphtk::alpha(g);
            } else if (cmd == "mu") {
                rec["mu"] = graphtk::mu(g);
            } else if (cmd == "decompose") {
                rec.update(decomposition_json(graphtk::decompose(g)));
            } else { // check
                if (!graphtk::is_connected(g)) {
                    rec["skip"] = "disconnected";
                } else {
                    auto r = graphtk::regularity(g);
                    if (!r) {
                        rec["skip"] = "not regular";
                    } else if (*r == 0) {
                        rec["skip"] = "degree zero";
                    } else {
                        graphtk::CharacterizationReport rep = graphtk::check(g);
                        rec.update(report_json(rep));
                        if (rep.r > 0 && rep.r < 3)
                            std::cerr << "line " << item.line << ": notice: r = " << rep.r
                                      << " < 3\n";
                        if (!rep.agree) any_disagree = true;
                    }
                }
            }
        } catch (const std::exception& e) {
            rec["error"] = e.what();
            std::cerr << "line " << item.line << ": " << e.what() << "\n";
            any_error = true;
        }
        out.emit(rec);
    }
    if (any_error) return 2;
    return any_disagree ? 1 : 0;
}

int run_verify(const graphtk::GenSpec& spec, bool exhaustive, bool records, Out& out) {
    long processed = 0, skipped = 0, agreements = 0, disagreements = 0;

    auto handle = [&](const graphtk::Graph& g) {
        if (!graphtk::is_connected(g)) {
            ++skipped;
            return;
        }
        ++processed;
        json failure;
        if (verify_one(g, failure)) {
            ++agreements;
            if (records) {
                json rec;
                rec["index"] = processed;
                rec["graph6"] = graphtk::to_graph6(g);
                rec["ok"] = true;
                out.emit(rec);
            }
        } else {
            ++disagreements;
            failure["index"] = processed;
            failure["graph6"] = graphtk::to_graph6(g);
            out.emit(failure);
            std::cerr << "disagreement on " << graphtk::to_graph6(g) << "\n";
        }
    };

    if (exhaustive) {
        graphtk::enumerate_regular(spec, handle);
    } else {
        for (const auto& g : graphtk::random_regular(spec)) handle(g);
    }

    json summary;
    summary["summary"] = {{"mode", exhaustive ? "exhaustive" : "random"},
                          {"n", spec.n},
                          {"r", spec.r},
                          {"count", spec.count},
                          {"seed", spec.seed},
                          {"graphs", processed},
                          {"skipped_disconnected", skipped},
                          {"agreements", agreements},
                          {"disagreements", disagreements}};
    out.emit(summary);
    return disagreements > 0 ? 1 : 0;
}

int run_gen(const graphtk::GenSpec& spec, bool exhaustive, Out& out) {
    if (exhaustive) {
        graphtk::enumerate_regular(
            spec, [&](const graphtk::Graph& g) { *out.os << graphtk::to_graph6(g) << "\n"; });
    } else {
        for (const auto& g : graphtk::random_regular(spec))
            *out.os << graphtk::to_graph6(g) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular-graph matching/independence toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    graphtk::GenSpec spec;
    bool exhaustive = false, random_mode = false, records = false;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", in_path, "graph6 input file (default: stdin)");
        sub->add_option("--out", out_path, "output file (default: stdout)");
    };
    auto add_gen = [&](CLI::App* sub) {
        sub->add_option("--n", spec.n, "vertex count")->required();
        sub->add_option("--r", spec.r, "degree")->required();
        sub->add_option("--count", spec.count, "sample count (random mode)");
        sub->add_option("--seed", spec.seed, "random seed");
        sub->add_flag("--exhaustive", exhaustive, "enumerate all labeled graphs");
        sub->add_flag("--random", random_mode, "pairing-model samples");
        sub->add_flag("--dedup", spec.dedup, "one graph per isomorphism class (exhaustive)");
        sub->add_option("--out", out_path, "output file (default: stdout)");
    };

    add_io(app.add_subcommand("alpha", "independence number per graph"));
    add_io(app.add_subcommand("mu", "matching number per graph"));
    add_io(app.add_subcommand("decompose", "Gallai-Edmonds partition per graph"));
    add_io(app.add_subcommand("check", "structural vs direct alpha=mu verdict per graph"));
    auto* verify = app.add_subcommand("verify", "generate a corpus and cross-check every graph");
    add_gen(verify);
    verify->add_flag("--records", records, "emit a record for every graph, not only failures");
    auto* gen = app.add_subcommand("gen", "emit generated graphs as graph6 lines");
    add_gen(gen);

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    try {
        Out out;
        out.open(out_path);
        if (cmd == "verify" || cmd == "gen") {
            if (exhaustive == random_mode)
                throw std::invalid_argument("pass exactly one of --exhaustive / --random");
            spec.mode = exhaustive ? graphtk::GenSpec::Mode::Exhaustive
                                   : graphtk::GenSpec::Mode::Random;
            return cmd == "verify" ? run_verify(spec, exhaustive, records, out)
                                   : run_gen(spec, exhaustive, out);
        }
        return run_per_graph(cmd, in_path, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
