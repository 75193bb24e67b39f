#ifndef GRAPHTK_GRAPHGEN_HPP
#define GRAPHTK_GRAPHGEN_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphtk/graph.hpp"

namespace graphtk {

struct GenSpec {
    enum class Mode { Exhaustive, Random, Ingest };

    int n = 0;
    int r = 0;
    Mode mode = Mode::Exhaustive;
    int count = 1;
    std::uint64_t seed = 0;
    bool dedup = false;
};

// Every labeled simple r-regular graph on n vertices, exactly once, by
// backtracking over the adjacency upper triangle. With dedup, one
// representative per isomorphism class (n <= 10). Throws
// std::invalid_argument on parity violation, std::length_error past the
// capacity caps (r <= 2: n <= 14; r = 3: n <= 12; r >= 4: n <= 10).
void enumerate_regular(const GenSpec& spec, const std::function<void(const Graph&)>& emit);

// Pairing-model samples: r stubs per vertex, uniform stub matching, full
// rejection of loops and parallel edges. Deterministic for a fixed seed.
// Throws std::runtime_error after 10000 rejected attempts for one sample.
std::vector<Graph> random_regular(const GenSpec& spec);

// G(n, p) sample; corpus plumbing for the inequality sweeps.
Graph random_gnp(int n, double p, std::mt19937_64& rng);

struct IngestItem {
    int line = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

// One item per nonempty line; parse failures carry the error and line
// number, processing continues.
std::vector<IngestItem> ingest(std::istream& in);
std::vector<IngestItem> ingest_file(const std::string& path);

// Minimum adjacency bit-string over all vertex permutations, as a
// '0'/'1' text key. Brute force, n <= 10 only.
std::string canonical_form(const Graph& g);

} // namespace graphtk

#endif
