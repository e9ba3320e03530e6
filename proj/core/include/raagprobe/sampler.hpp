#pragma once

#include <cstdint>

#include "raagprobe/graph.hpp"

namespace raagprobe {

// Deterministic per-trial randomness: stream_id = mix64(master_seed ^ mix64(trial_index)).
// mix64 is bijective, so for a fixed master seed every trial index yields a
// distinct stream id; the id seeds an independent xoshiro256++ stream.
struct SeedLineage {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
    std::uint64_t stream_id = 0;
};

SeedLineage derive_stream(std::uint64_t master_seed, std::uint64_t trial_index);

// Edge slots are linearized row-major over pairs (u, v) with u < v; both
// sampling paths consume slots in that order.
//
// sample_gnp picks the path by edge density: one uniform draw per slot above
// kSkipSamplingThreshold, geometric slot skipping at or below it.
inline constexpr double kSkipSamplingThreshold = 0.1;

Graph sample_gnp(int n, double p, const SeedLineage& lineage);
Graph sample_gnp_dense(int n, double p, const SeedLineage& lineage);
Graph sample_gnp_skip(int n, double p, const SeedLineage& lineage);

// log Pr[G(n,p) = g] = m ln p + (C(n,2) - m) ln(1-p).
// p = 0 or 1: 0 for the single graph of the degenerate measure, -inf otherwise.
double graph_log_probability(const Graph& g, double p);

}
