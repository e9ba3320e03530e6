#include "raagprobe/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "raagprobe/detectors.hpp"
#include "raagprobe/enumeration.hpp"
#include "raagprobe/errors.hpp"
#include "raagprobe/formulas.hpp"
#include "raagprobe/numeric.hpp"
#include "raagprobe/parallel.hpp"
#include "raagprobe/sampler.hpp"
#include "raagprobe/version.hpp"

namespace raagprobe {

namespace {

using nlohmann::json;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_known_fields(const json& obj, std::initializer_list<const char*> known,
                        const char* where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end())
            throw ConfigError(std::string("unknown config field in ") + where + ": " + key);
    }
}

}  // namespace

Estimate monte_carlo(int n, double p, const Statistic& stat, std::int64_t trials,
                     std::uint64_t master_seed, int workers) {
    if (n < 0) throw std::invalid_argument("need n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    if (trials < 1) throw std::invalid_argument("need trials >= 1");
    std::vector<double> counts(static_cast<std::size_t>(trials));
    parallel_for_ranges(trials, resolve_worker_count(workers),
                        [&](std::int64_t begin, std::int64_t end) {
                            for (std::int64_t t = begin; t < end; ++t) {
                                const Graph g = sample_gnp(
                                    n, p, derive_stream(master_seed, static_cast<std::uint64_t>(t)));
                                counts[static_cast<std::size_t>(t)] = evaluate_statistic(g, stat);
                            }
                        });
    Estimate est;
    est.n = n;
    est.p = p;
    est.statistic = stat;
    est.trials = trials;
    est.seed = master_seed;
    const MeanVariance mv = mean_variance(counts);
    est.mean_count = mv.mean;
    est.std_error_mean = std::sqrt(mv.variance / static_cast<double>(trials));
    std::int64_t hits = 0;
    for (double c : counts)
        if (c > 0.0) ++hits;
    est.existence_frequency = static_cast<double>(hits) / static_cast<double>(trials);
    est.exact_expectation = exact_expectation(stat, n, p);
    return est;
}

std::vector<double> ProbabilityRule::expand(int n) const {
    std::vector<double> out;
    if (kind == Kind::Explicit) {
        out = values;
    } else {
        for (double omega : omegas) {
            double p = 0.0;
            try {
                p = threshold(n) + omega / n;
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("threshold rule: ") + e.what());
            }
            if (side == ThresholdSide::High) p = 1.0 - p;
            out.push_back(p);
        }
    }
    for (double p : out)
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError("cell probability outside [0, 1] at n = " + std::to_string(n) +
                              ": " + format_real(p));
    return out;
}

SweepConfig parse_sweep_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    check_known_fields(root, {"n", "p", "trials", "seed", "statistics", "output"}, "config");
    for (const char* required : {"n", "p", "trials", "seed", "statistics"})
        if (!root.contains(required))
            throw ConfigError(std::string("missing config field: ") + required);

    SweepConfig cfg;
    const json& jn = root["n"];
    if (!jn.is_array() || jn.empty()) throw ConfigError("\"n\" must be a non-empty array");
    for (const json& v : jn) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw ConfigError("\"n\" entries must be integers >= 1");
        cfg.n_list.push_back(v.get<int>());
    }

    const json& jp = root["p"];
    if (!jp.is_object()) throw ConfigError("\"p\" must be an object with a \"rule\"");
    if (!jp.contains("rule") || !jp["rule"].is_string())
        throw ConfigError("\"p.rule\" must be \"explicit\" or \"threshold\"");
    const std::string rule = jp["rule"].get<std::string>();
    if (rule == "explicit") {
        check_known_fields(jp, {"rule", "values"}, "p");
        if (!jp.contains("values") || !jp["values"].is_array() || jp["values"].empty())
            throw ConfigError("\"p.values\" must be a non-empty array");
        cfg.p_rule.kind = ProbabilityRule::Kind::Explicit;
        for (const json& v : jp["values"]) {
            if (!v.is_number()) throw ConfigError("\"p.values\" entries must be numbers");
            const double p = v.get<double>();
            if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("\"p.values\" entries must lie in [0, 1]");
            cfg.p_rule.values.push_back(p);
        }
    } else if (rule == "threshold") {
        check_known_fields(jp, {"rule", "omegas", "side"}, "p");
        if (!jp.contains("omegas") || !jp["omegas"].is_array() || jp["omegas"].empty())
            throw ConfigError("\"p.omegas\" must be a non-empty array");
        cfg.p_rule.kind = ProbabilityRule::Kind::ThresholdOffset;
        for (const json& v : jp["omegas"]) {
            if (!v.is_number()) throw ConfigError("\"p.omegas\" entries must be numbers");
            cfg.p_rule.omegas.push_back(v.get<double>());
        }
        if (jp.contains("side")) {
            if (!jp["side"].is_string()) throw ConfigError("\"p.side\" must be \"low\" or \"high\"");
            const std::string side = jp["side"].get<std::string>();
            if (side == "low") cfg.p_rule.side = ThresholdSide::Low;
            else if (side == "high") cfg.p_rule.side = ThresholdSide::High;
            else throw ConfigError("\"p.side\" must be \"low\" or \"high\"");
        }
    } else {
        throw ConfigError("\"p.rule\" must be \"explicit\" or \"threshold\"");
    }

    if (!root["trials"].is_number_integer() || root["trials"].get<std::int64_t>() < 1)
        throw ConfigError("\"trials\" must be an integer >= 1");
    cfg.trials = root["trials"].get<std::int64_t>();

    if (!root["seed"].is_number_unsigned())
        throw ConfigError("\"seed\" must be a non-negative integer");
    cfg.seed = root["seed"].get<std::uint64_t>();

    const json& js = root["statistics"];
    if (!js.is_array() || js.empty()) throw ConfigError("\"statistics\" must be a non-empty array");
    for (const json& v : js) {
        if (!v.is_string()) throw ConfigError("\"statistics\" entries must be strings");
        cfg.statistics.push_back(parse_statistic(v.get<std::string>()));
    }

    if (root.contains("output")) {
        if (!root["output"].is_string()) throw ConfigError("\"output\" must be a string");
        cfg.output = root["output"].get<std::string>();
    }

    // Reject unexpandable cells up front.
    for (int n : cfg.n_list) cfg.p_rule.expand(n);
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sweep_config(buffer.str());
}

std::vector<Estimate> threshold_sweep(const SweepConfig& config, int workers) {
    std::vector<Estimate> rows;
    for (int n : config.n_list) {
        const std::vector<double> ps = config.p_rule.expand(n);
        for (double p : ps)
            for (const Statistic& stat : config.statistics)
                rows.push_back(monte_carlo(n, p, stat, config.trials, config.seed, workers));
    }
    return rows;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string canonical_config_string(const SweepConfig& cfg) {
    std::ostringstream out;
    out << "n:";
    for (int n : cfg.n_list) out << n << ",";
    out << "|p:" << (cfg.p_rule.kind == ProbabilityRule::Kind::Explicit ? "explicit" : "threshold");
    out << (cfg.p_rule.side == ThresholdSide::Low ? ",low:" : ",high:");
    for (double v : cfg.p_rule.kind == ProbabilityRule::Kind::Explicit ? cfg.p_rule.values
                                                                       : cfg.p_rule.omegas)
        out << format_real(v) << ",";
    out << "|trials:" << cfg.trials << "|seed:" << cfg.seed << "|stats:";
    for (const Statistic& s : cfg.statistics) out << to_string(s) << ",";
    return out.str();
}

}  // namespace

std::string sweep_csv(const SweepConfig& config, const std::vector<Estimate>& rows) {
    std::ostringstream out;
    char hash[20];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config_string(config))));
    out << "# raagprobe " << kVersion << " sweep\n";
    out << "# seed " << config.seed << "\n";
    out << "# config " << hash << "\n";
    out << "n,p,k,statistic,trials,seed,mean_count,existence_frequency,std_error_mean,"
           "exact_expectation,regime\n";
    for (const Estimate& e : rows) {
        out << e.n << "," << format_real(e.p) << ",";
        if (e.statistic.kind == StatKind::ProperStarKSep) out << e.statistic.k;
        out << "," << to_string(e.statistic) << "," << e.trials << "," << e.seed << ","
            << format_real(e.mean_count) << "," << format_real(e.existence_frequency) << ","
            << format_real(e.std_error_mean) << ",";
        if (e.exact_expectation) out << format_real(*e.exact_expectation);
        out << ",";
        if (e.n >= 3) out << to_string(classify_regime(e.n, e.p, kDefaultRegimeMargin).regime);
        out << "\n";
    }
    return out.str();
}

namespace {

void record(BoundAuditReport& report, int n, double p, int k, const char* name,
            double expectation, double bound_value, double scale) {
    const double scaled = bound_value * scale;
    ++report.comparisons;
    const double slack = scaled - expectation;
    report.min_slack = std::min(report.min_slack, slack);
    report.max_slack = std::max(report.max_slack, slack);
    if (expectation > scaled + 1e-12)
        report.violations.push_back({n, p, k, name, expectation, scaled});
}

}  // namespace

BoundAuditReport bound_audit(const BoundAuditConfig& config) {
    if (config.n_min < 2 || config.n_max > 10000 || config.n_min > config.n_max)
        throw ConfigError("audit grid must satisfy 2 <= n_min <= n_max <= 10000");
    if (!(config.p_step > 0.0) || !(config.p_min > 0.0) || !(config.p_max < 1.0) ||
        config.p_min > config.p_max)
        throw ConfigError("audit grid needs 0 < p_min <= p_max < 1 and p_step > 0");
    BoundAuditReport report;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const double t = n >= 3 ? threshold(n) : 0.0;
        for (int k = 1; k <= n / 2; ++k) {
            for (int i = 0;; ++i) {
                const double p = config.p_min + i * config.p_step;
                if (p > config.p_max + 1e-9) break;
                const double expectation = expected_proper_star_k_separations(n, p, k);
                ++report.points_checked;
                if (n >= k + 2) {
                    record(report, n, p, k, "bound_A", expectation, star_sep_bound_A(n, p, k),
                           config.bound_scale);
                    record(report, n, p, k, "bound_B", expectation, star_sep_bound_B(n, p, k),
                           config.bound_scale);
                }
                if (n >= 2 * k) {
                    if (p >= 0.4)
                        record(report, n, p, k, "highp_envelope_F", expectation,
                               highp_envelope_F(k, n, 1.0 - p), config.bound_scale);
                    if (n >= 3 && t <= p && p <= 0.4)
                        record(report, n, p, k, "envelope_G", expectation, envelope_G(k, n, p),
                               config.bound_scale);
                }
            }
        }
    }
    return report;
}

std::optional<std::string> lemma_property_check(const Graph& g) {
    const int n = g.vertex_count();
    const Graph gc = g.complement();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (dominates(g, a, b) != dominates(gc, b, a))
                return "complement duality of domination pairs";
        }
    if (n >= 1) {
        for (const auto& [a, s] : proper_star_k_separations(g, 1)) {
            const int b = s.first();
            if (g.has_edge(a, b) || !dominates(g, a, b))
                return "star 1-separation must give a non-adjacent domination pair";
        }
    }
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (c == a || g.has_edge(a, c) || !dominates(g, a, c)) continue;
            if (g.degree(c) == 0) continue;
            bool has_adjacent_dominator = false;  // scan every x ~ c, no shortcut
            for (int x = 0; x < n && !has_adjacent_dominator; ++x)
                if (x != c && g.has_edge(x, c) && dominates(g, x, c))
                    has_adjacent_dominator = true;
            if (has_adjacent_dominator) continue;
            if (count_diamonds_through(g, a, c) == 0)
                return "diamond forcing for non-adjacent domination";
        }
    return std::nullopt;
}

FuzzReport lemma_property_fuzz(const FuzzConfig& config) {
    FuzzReport report;
    if (config.exhaustive) {
        GraphEnumerator en(config.n);
        while (en.has_next()) {
            const std::uint64_t mask = static_cast<std::uint64_t>(report.graphs_checked);
            const Graph g = en.next();
            ++report.graphs_checked;
            if (auto failed = lemma_property_check(g)) {
                report.passed = false;
                report.failed_check = *failed;
                report.counterexample = g;
                report.counterexample_index = mask;
                return report;
            }
        }
        return report;
    }
    if (config.trials < 1) throw std::invalid_argument("need trials >= 1");
    if (!(config.p >= 0.0 && config.p <= 1.0))
        throw std::invalid_argument("p must lie in [0, 1]");
    for (std::int64_t t = 0; t < config.trials; ++t) {
        const Graph g =
            sample_gnp(config.n, config.p, derive_stream(config.seed, static_cast<std::uint64_t>(t)));
        ++report.graphs_checked;
        if (auto failed = lemma_property_check(g)) {
            report.passed = false;
            report.failed_check = *failed;
            report.counterexample = g;
            report.counterexample_index = static_cast<std::uint64_t>(t);
            return report;
        }
    }
    return report;
}

}
