#pragma once

#include <optional>
#include <string>

#include "raagprobe/graph.hpp"

namespace raagprobe {

enum class StatKind {
    NonAdjDomPairs,
    AdjDomPairs,
    DomPairsTotal,
    Diamonds,
    ProperStarKSep,  // carries k
    StarCutVertices,
    IsolatedVertices,
    ValenceOne,
    IsolatedEdges,
    OutFinite,  // 0/1 flag
};

struct Statistic {
    StatKind kind = StatKind::DomPairsTotal;
    int k = 0;  // meaningful for ProperStarKSep only

    bool operator==(const Statistic&) const = default;
};

// Accepts the statistic name, with ProperStarKSep taking its size as
// "ProperStarKSep(2)". Throws ConfigError on anything else.
Statistic parse_statistic(const std::string& text);
std::string to_string(const Statistic& stat);

// Per-graph value of the statistic (a count, or 0/1 for OutFinite).
double evaluate_statistic(const Graph& g, const Statistic& stat);

// Closed-form expectation over G(n,p), when one exists for this statistic
// and the preconditions of the formula hold; nullopt otherwise.
std::optional<double> exact_expectation(const Statistic& stat, int n, double p);

}
