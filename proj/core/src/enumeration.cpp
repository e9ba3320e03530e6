#include "raagprobe/enumeration.hpp"

#include <cmath>
#include <stdexcept>

#include "raagprobe/sampler.hpp"

namespace raagprobe {

std::int64_t pair_slot_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 0 || pair_slot_count(n) > 64)
        throw std::invalid_argument("edge mask covers at most 64 slots");
    std::vector<std::pair<int, int>> edges;
    std::int64_t slot = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++slot)
            if (mask >> slot & 1) edges.emplace_back(u, v);
    if (slot < 64 && (mask >> slot) != 0)
        throw std::invalid_argument("edge mask has bits beyond the last slot");
    return Graph(n, edges);
}

GraphEnumerator::GraphEnumerator(int n, bool allow_large) : n_(n) {
    const int ceiling = allow_large ? 7 : 6;
    if (n < 0 || n > ceiling)
        throw std::invalid_argument("enumeration ceiling is n <= " + std::to_string(ceiling));
    total_ = std::uint64_t{1} << pair_slot_count(n);
}

Graph GraphEnumerator::next() {
    if (!has_next()) throw std::out_of_range("enumeration exhausted");
    return graph_from_edge_mask(n_, next_mask_++);
}

std::vector<double> oracle_expectations(int n, double p, const std::vector<Statistic>& stats,
                                        bool allow_large) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    GraphEnumerator en(n, allow_large);
    // Kahan accumulation: 2^21 weighted terms at worst.
    std::vector<double> sums(stats.size(), 0.0);
    std::vector<double> carry(stats.size(), 0.0);
    while (en.has_next()) {
        const Graph g = en.next();
        const double weight = std::exp(graph_log_probability(g, p));
        if (weight == 0.0) continue;
        for (std::size_t i = 0; i < stats.size(); ++i) {
            const double term = weight * evaluate_statistic(g, stats[i]);
            const double y = term - carry[i];
            const double t = sums[i] + y;
            carry[i] = (t - sums[i]) - y;
            sums[i] = t;
        }
    }
    return sums;
}

double oracle_expectation(int n, double p, const Statistic& stat, bool allow_large) {
    return oracle_expectations(n, p, {stat}, allow_large)[0];
}

}
