#pragma once

#include <cstdint>
#include <vector>

#include "raagprobe/graph.hpp"
#include "raagprobe/statistics.hpp"

namespace raagprobe {

// Number of vertex-pair slots, C(n,2).
std::int64_t pair_slot_count(int n);

// Graph whose edge set is the bitmask over row-major slots: slot s is the
// s-th pair (u,v), u < v, ordered by u then v -- the sampler's slot order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Yields every labeled graph on n vertices exactly once, in edge-mask order.
// Ceiling n <= 6 (32768 graphs); n = 7 only with allow_large (2^21 graphs).
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, bool allow_large = false);

    std::uint64_t total() const { return total_; }
    bool has_next() const { return next_mask_ < total_; }
    Graph next();

private:
    int n_ = 0;
    std::uint64_t next_mask_ = 0;
    std::uint64_t total_ = 0;
};

// E[stat] = sum over all graphs of Pr(graph) * stat(graph), by enumeration.
double oracle_expectation(int n, double p, const Statistic& stat, bool allow_large = false);
// One enumeration pass shared by several statistics.
std::vector<double> oracle_expectations(int n, double p, const std::vector<Statistic>& stats,
                                        bool allow_large = false);

}
