#pragma once

#include <cstdint>
#include <string>

#include "raagprobe/detectors.hpp"
#include "raagprobe/graph.hpp"

namespace raagprobe {

// Everything `analyze` emits about one graph. Counts are exact; witness
// lists honor the cap they were built with.
struct AnalyzeReport {
    std::string input;  // path, or "-" for stdin
    int n = 0;
    std::int64_t m = 0;
    std::size_t max_witnesses = kNoWitnessCap;
    DominationReport domination;
    StarSeparationReport separations;
    FinitenessVerdict verdict;
};

AnalyzeReport analyze_graph(const Graph& g, std::size_t witness_cap = kNoWitnessCap);

// JSON with stable field order: counts first, witness lists after.
std::string render_json(const AnalyzeReport& report);
std::string render_text(const AnalyzeReport& report);

}
