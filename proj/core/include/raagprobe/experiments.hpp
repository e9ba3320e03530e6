#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "raagprobe/graph.hpp"
#include "raagprobe/statistics.hpp"

namespace raagprobe {

// Margin used for the regime column in sweep output and as the CLI default.
inline constexpr double kDefaultRegimeMargin = 3.0;

struct Estimate {
    int n = 0;
    double p = 0.0;
    Statistic statistic;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_count = 0.0;
    double existence_frequency = 0.0;  // fraction of trials with value >= 1
    double std_error_mean = 0.0;       // sample std / sqrt(trials)
    std::optional<double> exact_expectation;
};

// Independent trials on streams derived from (master_seed, trial index);
// the result is identical for every worker count. workers <= 0 means auto.
Estimate monte_carlo(int n, double p, const Statistic& stat, std::int64_t trials,
                     std::uint64_t master_seed, int workers = 0);

enum class ThresholdSide { Low, High };

// Per-cell edge probability: either an explicit list, or offsets from the
// connectivity-style threshold, p = (ln n + ln ln n + omega)/n on the Low
// side and 1 minus that on the High side.
struct ProbabilityRule {
    enum class Kind { Explicit, ThresholdOffset };
    Kind kind = Kind::Explicit;
    std::vector<double> values;  // Explicit
    std::vector<double> omegas;  // ThresholdOffset
    ThresholdSide side = ThresholdSide::Low;

    // Concrete p list for one n; ConfigError when a cell leaves [0, 1].
    std::vector<double> expand(int n) const;
};

struct SweepConfig {
    std::vector<int> n_list;
    ProbabilityRule p_rule;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<Statistic> statistics;
    std::string output;  // may be empty; the CLI requires one from here or --out
};

// Strict JSON: unknown fields anywhere are a ConfigError.
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

// One row per (n, p, statistic), n outermost, statistics innermost.
std::vector<Estimate> threshold_sweep(const SweepConfig& config, int workers = 0);

// Deterministic CSV: `# key value` metadata lines, the fixed header
// n,p,k,statistic,trials,seed,mean_count,existence_frequency,std_error_mean,
// exact_expectation,regime, then one line per row with reals at 17
// significant digits. Byte-identical across reruns and worker counts.
std::string sweep_csv(const SweepConfig& config, const std::vector<Estimate>& rows);

std::uint64_t fnv1a64(const std::string& text);

struct BoundViolation {
    int n = 0;
    double p = 0.0;
    int k = 0;
    std::string bound;  // which comparison failed
    double expectation = 0.0;
    double bound_value = 0.0;
};

struct BoundAuditConfig {
    int n_min = 6;
    int n_max = 60;             // hard ceiling 10^4
    double p_min = 0.05;
    double p_max = 0.95;
    double p_step = 0.05;
    // k ranges over 1..n/2 at every n
    double bound_scale = 1.0;   // test hook: scales every bound before comparison
};

struct BoundAuditReport {
    std::int64_t points_checked = 0;   // (n, p, k) triples
    std::int64_t comparisons = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double max_slack = -std::numeric_limits<double>::infinity();
    std::vector<BoundViolation> violations;
    bool passed() const { return violations.empty(); }
};

// Checks E[U_k] <= bound_A and <= bound_B everywhere on the grid, plus the
// high-p envelope (p >= 2/5, via q = 1-p) and the low-p envelope
// (t(n) <= p <= 2/5); tolerance 1e-12 absolute.
BoundAuditReport bound_audit(const BoundAuditConfig& config);

struct FuzzConfig {
    int n = 0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;  // enumerate every graph on n vertices instead
};

struct FuzzReport {
    std::int64_t graphs_checked = 0;
    bool passed = true;
    std::string failed_check;           // empty when passed
    std::optional<Graph> counterexample;
    std::uint64_t counterexample_index = 0;  // trial index / enumeration mask
};

// Name of the first violated structural property, nullopt when g passes:
//  - complement duality of domination pairs (ordered, pointwise)
//  - every proper star 1-separation (a,{b}) is a non-adjacent domination pair
//  - diamond forcing: non-adjacent (a,c) with c non-isolated and no adjacent
//    dominator of c implies a diamond through (a, ., c, .)
std::optional<std::string> lemma_property_check(const Graph& g);

FuzzReport lemma_property_fuzz(const FuzzConfig& config);

}
