#include "raagprobe/statistics.hpp"

#include <stdexcept>

#include "raagprobe/detectors.hpp"
#include "raagprobe/errors.hpp"
#include "raagprobe/formulas.hpp"

namespace raagprobe {

Statistic parse_statistic(const std::string& text) {
    static const std::pair<const char*, StatKind> kPlain[] = {
        {"NonAdjDomPairs", StatKind::NonAdjDomPairs},
        {"AdjDomPairs", StatKind::AdjDomPairs},
        {"DomPairsTotal", StatKind::DomPairsTotal},
        {"Diamonds", StatKind::Diamonds},
        {"StarCutVertices", StatKind::StarCutVertices},
        {"IsolatedVertices", StatKind::IsolatedVertices},
        {"ValenceOne", StatKind::ValenceOne},
        {"IsolatedEdges", StatKind::IsolatedEdges},
        {"OutFinite", StatKind::OutFinite},
    };
    for (const auto& [name, kind] : kPlain)
        if (text == name) return Statistic{kind, 0};
    const std::string prefix = "ProperStarKSep(";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() && text.back() == ')') {
        const std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(inner, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad separation size in statistic: " + text);
        }
        if (used != inner.size() || k < 1)
            throw ConfigError("bad separation size in statistic: " + text);
        return Statistic{StatKind::ProperStarKSep, k};
    }
    throw ConfigError("unknown statistic: " + text);
}

std::string to_string(const Statistic& stat) {
    switch (stat.kind) {
        case StatKind::NonAdjDomPairs: return "NonAdjDomPairs";
        case StatKind::AdjDomPairs: return "AdjDomPairs";
        case StatKind::DomPairsTotal: return "DomPairsTotal";
        case StatKind::Diamonds: return "Diamonds";
        case StatKind::ProperStarKSep: return "ProperStarKSep(" + std::to_string(stat.k) + ")";
        case StatKind::StarCutVertices: return "StarCutVertices";
        case StatKind::IsolatedVertices: return "IsolatedVertices";
        case StatKind::ValenceOne: return "ValenceOne";
        case StatKind::IsolatedEdges: return "IsolatedEdges";
        case StatKind::OutFinite: return "OutFinite";
    }
    throw std::logic_error("unhandled statistic kind");
}

double evaluate_statistic(const Graph& g, const Statistic& stat) {
    switch (stat.kind) {
        case StatKind::NonAdjDomPairs:
            return static_cast<double>(count_domination_pairs(g).nonadjacent);
        case StatKind::AdjDomPairs:
            return static_cast<double>(count_domination_pairs(g).adjacent);
        case StatKind::DomPairsTotal:
            return static_cast<double>(count_domination_pairs(g).total());
        case StatKind::Diamonds:
            return static_cast<double>(count_diamonds(g));
        case StatKind::ProperStarKSep:
            return proper_star_k_separation_count(g, stat.k);
        case StatKind::StarCutVertices:
            return static_cast<double>(star_cut_vertices(g).count());
        case StatKind::IsolatedVertices:
            return static_cast<double>(isolated_vertices(g).count());
        case StatKind::ValenceOne:
            return static_cast<double>(valence_one_vertices(g).count());
        case StatKind::IsolatedEdges:
            return static_cast<double>(isolated_edges(g).size());
        case StatKind::OutFinite:
            return finiteness_verdict(g).label == FinitenessLabel::Finite ? 1.0 : 0.0;
    }
    throw std::logic_error("unhandled statistic kind");
}

std::optional<double> exact_expectation(const Statistic& stat, int n, double p) {
    switch (stat.kind) {
        case StatKind::NonAdjDomPairs:
            if (n < 2) return std::nullopt;
            return expected_nonadjacent_domination_pairs(n, p);
        case StatKind::AdjDomPairs:
            if (n < 2) return std::nullopt;
            return expected_adjacent_domination_pairs(n, p);
        case StatKind::DomPairsTotal:
            if (n < 2) return std::nullopt;
            return expected_nonadjacent_domination_pairs(n, p) +
                   expected_adjacent_domination_pairs(n, p);
        case StatKind::Diamonds:
            if (n < 4) return std::nullopt;
            return expected_domination_diamonds(n, p);
        case StatKind::ProperStarKSep:
            if (n < 2 || stat.k < 1 || stat.k > n - 1) return std::nullopt;
            return expected_proper_star_k_separations(n, p, stat.k);
        default:
            return std::nullopt;
    }
}

}
