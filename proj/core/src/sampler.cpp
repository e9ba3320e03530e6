#include "raagprobe/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "raagprobe/rng.hpp"

namespace raagprobe {

namespace {

void check_args(int n, double p) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

void set_edge(std::vector<std::uint64_t>& rows, int wpr, int u, int v) {
    rows[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows[static_cast<std::size_t>(v) * wpr + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

}  // namespace

SeedLineage derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
    SeedLineage lineage;
    lineage.master_seed = master_seed;
    lineage.trial_index = trial_index;
    lineage.stream_id = mix64(master_seed ^ mix64(trial_index));
    return lineage;
}

Graph sample_gnp_dense(int n, double p, const SeedLineage& lineage) {
    check_args(n, p);
    int wpr = Graph::words_per_row(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n == 0 ? 1 : n) * wpr, 0);
    Xoshiro256pp rng(lineage.stream_id);
    for (int u = 0; u + 1 < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_double() < p) set_edge(rows, wpr, u, v);
        }
    }
    return Graph::from_rows(n, std::move(rows));
}

Graph sample_gnp_skip(int n, double p, const SeedLineage& lineage) {
    check_args(n, p);
    int wpr = Graph::words_per_row(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n == 0 ? 1 : n) * wpr, 0);
    if (p > 0.0) {
        Xoshiro256pp rng(lineage.stream_id);
        std::int64_t slots = static_cast<std::int64_t>(n) * (n - 1) / 2;
        double log1mp = std::log1p(-p);  // < 0
        std::int64_t pos = 0;
        int u = 0, v = 1;  // vertex pair at slot `pos`
        std::int64_t next = -1;
        while (true) {
            // Number of empty slots before the next edge: floor(ln U / ln(1-p)), U in (0, 1].
            double u01 = 1.0 - rng.next_double();  // (0, 1]
            double skip = std::floor(std::log(u01) / log1mp);
            if (skip >= static_cast<double>(slots)) break;  // guards overflow for tiny p
            next += 1 + static_cast<std::int64_t>(skip);
            if (next >= slots) break;
            // Walk (u, v) forward to slot `next`.
            std::int64_t delta = next - pos;
            while (delta > 0) {
                int row_left = n - v;  // slots in row u from (u, v) to (u, n-1)
                if (delta < row_left) {
                    v += static_cast<int>(delta);
                    delta = 0;
                } else {
                    delta -= row_left;
                    ++u;
                    v = u + 1;
                }
            }
            pos = next;
            set_edge(rows, wpr, u, v);
        }
    }
    return Graph::from_rows(n, std::move(rows));
}

Graph sample_gnp(int n, double p, const SeedLineage& lineage) {
    check_args(n, p);
    return p > kSkipSamplingThreshold ? sample_gnp_dense(n, p, lineage)
                                      : sample_gnp_skip(n, p, lineage);
}

double graph_log_probability(const Graph& g, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::int64_t n = g.vertex_count();
    std::int64_t slots = n * (n - 1) / 2;
    std::int64_t m = g.edge_count();
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    if (p == 0.0) return m == 0 ? 0.0 : kNegInf;
    if (p == 1.0) return m == slots ? 0.0 : kNegInf;
    return static_cast<double>(m) * std::log(p) +
           static_cast<double>(slots - m) * std::log1p(-p);
}

}
