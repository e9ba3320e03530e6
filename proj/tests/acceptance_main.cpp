// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its elapsed time; statistical criteria get one retry on a shifted seed
// before counting as failed. Exit status 0 only when every criterion passed.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "raagprobe/detectors.hpp"
#include "raagprobe/enumeration.hpp"
#include "raagprobe/experiments.hpp"
#include "raagprobe/formulas.hpp"
#include "raagprobe/graph.hpp"
#include "raagprobe/numeric.hpp"
#include "raagprobe/rng.hpp"
#include "raagprobe/sampler.hpp"
#include "raagprobe/statistics.hpp"
#include "raagprobe/version.hpp"

using namespace raagprobe;

namespace {

std::string text(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buffer[768];
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        passed = false;
        notes.push_back(note);
    }
    void note(const std::string& note) { notes.push_back(note); }
};

struct Harness {
    int failures = 0;

    void run(const std::string& name, double budget_seconds,
             const std::function<void(Outcome&)>& body) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            body(outcome);
        } catch (const std::exception& e) {
            outcome.fail(std::string("unhandled exception: ") + e.what());
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0.0 && seconds > budget_seconds)
            outcome.fail(text("ran %.1fs, over the %.0fs budget", seconds, budget_seconds));
        std::printf("%s  %s  (%.1fs)\n", outcome.passed ? "PASS" : "FAIL", name.c_str(), seconds);
        for (const std::string& note : outcome.notes) std::printf("      | %s\n", note.c_str());
        std::fflush(stdout);
        if (!outcome.passed) ++failures;
    }

    void run_statistical(const std::string& name, double budget_seconds, std::uint64_t seed,
                         const std::function<void(Outcome&, std::uint64_t)>& body) {
        run(name, budget_seconds, [&](Outcome& outcome) {
            Outcome first;
            body(first, seed);
            if (first.passed) {
                outcome.notes = first.notes;
                return;
            }
            Outcome second;
            body(second, seed + 1);
            if (second.passed) {
                outcome.notes = second.notes;
                outcome.note("first attempt fell outside the band; retry on a shifted seed passed");
                return;
            }
            outcome.passed = false;
            outcome.notes = first.notes;
            for (const std::string& n : second.notes) outcome.notes.push_back("retry: " + n);
        });
    }
};

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

// A1: brute-force enumeration expectations match every closed form to 1e-9.
void closed_forms_vs_enumeration(Outcome& out) {
    std::vector<Statistic> stats{parse_statistic("NonAdjDomPairs"), parse_statistic("AdjDomPairs"),
                                 parse_statistic("Diamonds"), parse_statistic("ProperStarKSep(1)"),
                                 parse_statistic("ProperStarKSep(2)")};
    int comparisons = 0;
    double worst = 0.0;
    for (int n : {2, 3, 4, 5}) {
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            std::vector<double> oracle = oracle_expectations(n, p, stats);
            for (std::size_t i = 0; i < stats.size(); ++i) {
                std::optional<double> closed = exact_expectation(stats[i], n, p);
                if (!closed) continue;
                double gap = std::fabs(oracle[i] - *closed);
                worst = std::max(worst, gap);
                ++comparisons;
                if (gap > 1e-9)
                    out.fail(text("%s n=%d p=%.1f: |enumeration - closed form| = %.3e",
                                  to_string(stats[i]).c_str(), n, p, gap));
            }
        }
    }
    if (comparisons < 80) out.fail(text("only %d comparisons ran", comparisons));
    out.note(text("%d comparisons over n in {2..5}, worst absolute gap %.2e", comparisons, worst));
}

// A2: classical fixtures come out exactly.
void fixture_checks(Outcome& out) {
    DominationCounts p4 = count_domination_pairs(path_graph(4));
    if (p4.adjacent != 2 || p4.nonadjacent != 2)
        out.fail(text("four-path: %llu adjacent + %llu non-adjacent pairs, wanted 2 + 2",
                      (unsigned long long)p4.adjacent, (unsigned long long)p4.nonadjacent));

    if (is_star_two_connected(path_graph(5)))
        out.fail("five-path: no star cut vertex found, wanted one at the midpoint");

    Graph c5 = cycle_graph(5);
    if (!is_star_two_connected(c5)) out.fail("five-cycle: found a star cut vertex");
    if (count_domination_pairs(c5).total() != 0) out.fail("five-cycle: found domination pairs");
    FinitenessVerdict verdict = finiteness_verdict(c5);
    if (verdict.label != FinitenessLabel::Finite)
        out.fail(text("five-cycle verdict: %s", to_string(verdict.label)));
    if (out.passed)
        out.note("four-path pair split, five-path star cut, five-cycle finite verdict all exact");
}

// A3: domination counts swap adjacency classes under graph complement.
void duality(Outcome& out) {
    std::int64_t exhaustive = 0;
    for (int n = 1; n <= 5; ++n) {
        GraphEnumerator en(n);
        while (en.has_next()) {
            Graph g = en.next();
            DominationCounts a = count_domination_pairs(g);
            DominationCounts b = count_domination_pairs(g.complement());
            ++exhaustive;
            if (a.adjacent != b.nonadjacent || a.nonadjacent != b.adjacent) {
                out.fail(text("n=%d graph #%lld: complement counts disagree", n,
                              (long long)exhaustive));
                return;
            }
        }
    }
    Xoshiro256pp density_rng(20260819);
    std::int64_t sampled = 0;
    for (int n : {20, 50}) {
        for (int trial = 0; trial < 1000; ++trial) {
            double p = density_rng.next_double();
            Graph g = sample_gnp(n, p, derive_stream(0xD0A1u + n, (std::uint64_t)trial));
            DominationCounts a = count_domination_pairs(g);
            DominationCounts b = count_domination_pairs(g.complement());
            ++sampled;
            if (a.adjacent != b.nonadjacent || a.nonadjacent != b.adjacent) {
                out.fail(text("n=%d p=%.3f trial %d: complement counts disagree", n, p, trial));
                return;
            }
        }
    }
    out.note(text("%lld exhaustive + %lld sampled graphs, all dual", (long long)exhaustive,
                  (long long)sampled));
}

// A4: structural forcing (duality, 1-separation pairs, diamond forcing) under
// exhaustive and sampled fuzzing, zero counterexamples.
void forcing(Outcome& out) {
    FuzzConfig ex;
    ex.n = 5;
    ex.exhaustive = true;
    FuzzReport exhaustive = lemma_property_fuzz(ex);
    if (!exhaustive.passed)
        out.fail(text("exhaustive n=5 mask %llu: %s",
                      (unsigned long long)exhaustive.counterexample_index,
                      exhaustive.failed_check.c_str()));

    std::int64_t sampled = 0;
    for (double p : {0.2, 0.9}) {
        FuzzConfig cfg;
        cfg.n = 30;
        cfg.p = p;
        cfg.trials = 5000;
        cfg.seed = 0xF0 + (std::uint64_t)(p * 10);
        FuzzReport report = lemma_property_fuzz(cfg);
        sampled += report.graphs_checked;
        if (!report.passed)
            out.fail(text("n=30 p=%.1f trial %llu: %s", p,
                          (unsigned long long)report.counterexample_index,
                          report.failed_check.c_str()));
    }
    if (out.passed)
        out.note(text("%llu exhaustive + %lld sampled graphs, zero counterexamples",
                      (unsigned long long)exhaustive.graphs_checked, (long long)sampled));
}

// A5: expectation bounds and their binomial-free envelopes dominate on the
// full audit grid, and the envelope corner ratios at k=40 on the n=2k
// diagonal land within 0.05 of their sharp limits.
void bound_and_corner_audit(Outcome& out) {
    BoundAuditReport report = bound_audit(BoundAuditConfig{});
    if (report.passed()) {
        out.note(text("grid n in [6,60], k <= n/2, p in [0.05,0.95]: %lld points, %lld "
                      "comparisons, min slack %.3e",
                      (long long)report.points_checked, (long long)report.comparisons,
                      report.min_slack));
    } else {
        const BoundViolation& v = report.violations.front();
        out.fail(text("%zu violations; first at n=%d p=%.2f k=%d (%s): E=%.6g > %.6g",
                      report.violations.size(), v.n, v.p, v.k, v.bound.c_str(), v.expectation,
                      v.bound_value));
    }

    const double f_ratio = highp_envelope_F(41, 82, 0.6) / highp_envelope_F(40, 80, 0.6);
    const double f_target = 72.0 / 125.0;
    const double f_gap = std::fabs(f_ratio - f_target);
    if (f_gap <= 0.05)
        out.note(text("high-p corner step F(41,82,3/5)/F(40,80,3/5) = %.7f vs %.6f, gap %.4f",
                      f_ratio, f_target, f_gap));
    else
        out.fail(text("high-p corner step %.7f vs %.6f, gap %.4f > 0.05", f_ratio, f_target,
                      f_gap));

    const double g_ratio = envelope_G(41, 82, 0.4) / envelope_G(40, 80, 0.4);
    const double g_target = 24.0 / 25.0;
    const double g_gap = std::fabs(g_ratio - g_target);
    if (g_gap <= 0.05) {
        out.note(text("low-p corner step G(41,82,2/5)/G(40,80,2/5) = %.7f vs %.6f, gap %.4f",
                      g_ratio, g_target, g_gap));
    } else {
        out.fail(text("low-p corner step G(41,82,2/5)/G(40,80,2/5) = %.7f vs %.6f, gap %.4f > "
                      "0.05",
                      g_ratio, g_target, g_gap));
        out.note(text("the k^{k-1} prefactor makes this step exactly (24/25)((k+1)/k)^3 = %.7f "
                      "at k=40",
                      g_target * std::pow(41.0 / 40.0, 3)));
        out.note("the cubic factor decays like (1+1/k)^3: the step first enters the 0.05 band "
                 "at k=59");
        out.note("and first drops below 1 at k=74, so no implementation can meet the k=40 "
                 "target; kept red");
    }
}

// A6: Monte Carlo means land within four standard errors of the closed forms.
void monte_carlo_clt(Outcome& out, std::uint64_t seed) {
    struct Cell {
        int n;
        double p;
        std::int64_t trials;
    };
    for (const Cell& cell : {Cell{50, 0.5, 100000}, Cell{200, 0.05, 10000}}) {
        for (const char* name : {"NonAdjDomPairs", "Diamonds", "ProperStarKSep(1)"}) {
            Estimate e = monte_carlo(cell.n, cell.p, parse_statistic(name), cell.trials, seed);
            if (!e.exact_expectation) {
                out.fail(text("%s n=%d: closed form unexpectedly missing", name, cell.n));
                continue;
            }
            double gap = std::fabs(e.mean_count - *e.exact_expectation);
            double z = e.std_error_mean > 0.0 ? gap / e.std_error_mean
                                              : (gap == 0.0 ? 0.0 : HUGE_VAL);
            if (z <= 4.0)
                out.note(text("n=%d p=%.2f %s: mean %.5g vs exact %.5g, |z| = %.2f", cell.n,
                              cell.p, name, e.mean_count, *e.exact_expectation, z));
            else
                out.fail(text("n=%d p=%.2f %s: mean %.5g vs exact %.5g, |z| = %.2f > 4", cell.n,
                              cell.p, name, e.mean_count, *e.exact_expectation, z));
        }
    }
}

// A7: existence frequencies trend the right way across the threshold family
// p = (ln n + ln ln n +/- 3)/n over the full chain n = 128..1024.
void threshold_shadow(Outcome& out, std::uint64_t seed) {
    const std::vector<int> ns{128, 256, 512, 1024};
    const std::int64_t trials = 2000;

    std::vector<double> above;
    for (int n : ns) {
        double p = (std::log((double)n) + std::log(std::log((double)n)) + 3.0) / n;
        above.push_back(
            monte_carlo(n, p, parse_statistic("DomPairsTotal"), trials, seed).existence_frequency);
    }
    for (std::size_t i = 0; i + 1 < above.size(); ++i)
        if (above[i + 1] > above[i])
            out.fail(text("offset +3: existence rose %.4f -> %.4f from n=%d to n=%d", above[i],
                          above[i + 1], ns[i], ns[i + 1]));
    out.note(text("offset +3, any pair: %.4f %.4f %.4f %.4f (want non-increasing)", above[0],
                  above[1], above[2], above[3]));

    std::vector<double> below;
    for (int n : ns) {
        double p = (std::log((double)n) + std::log(std::log((double)n)) - 3.0) / n;
        below.push_back(monte_carlo(n, p, parse_statistic("NonAdjDomPairs"), trials, seed)
                            .existence_frequency);
    }
    for (std::size_t i = 0; i + 1 < below.size(); ++i)
        if (below[i + 1] < below[i])
            out.fail(text("offset -3: existence fell %.4f -> %.4f from n=%d to n=%d", below[i],
                          below[i + 1], ns[i], ns[i + 1]));
    out.note(text("offset -3, non-adjacent pair: %.4f %.4f %.4f %.4f (want non-decreasing)",
                  below[0], below[1], below[2], below[3]));
}

// A8: the finite-verdict frequency at p = 1/2 is non-decreasing in n; the
// 0.99 level at n = 256 is logged but not asserted.
void finiteness_shadow(Outcome& out, std::uint64_t seed) {
    const std::vector<int> ns{64, 128, 256};
    std::vector<double> freq;
    for (int n : ns)
        freq.push_back(monte_carlo(n, 0.5, parse_statistic("OutFinite"), 2000, seed).mean_count);
    for (std::size_t i = 0; i + 1 < freq.size(); ++i)
        if (freq[i + 1] < freq[i])
            out.fail(text("finite frequency fell %.4f -> %.4f from n=%d to n=%d", freq[i],
                          freq[i + 1], ns[i], ns[i + 1]));
    out.note(text("finite verdict frequency: %.4f (n=64) %.4f (n=128) %.4f (n=256)", freq[0],
                  freq[1], freq[2]));
    if (freq.back() > 0.99)
        out.note("soft level: n=256 frequency clears 0.99");
    else
        out.note(text("soft level missed at n=256: %.4f <= 0.99 (logged only)", freq.back()));
}

// A9: the sweep report is byte-identical for every worker count.
void determinism(Outcome& out) {
    SweepConfig cfg = parse_sweep_config(R"json({
        "n": [16, 32],
        "p": {"rule": "explicit", "values": [0.1, 0.5]},
        "trials": 500,
        "seed": 2026,
        "statistics": ["NonAdjDomPairs", "ProperStarKSep(1)", "OutFinite"]
    })json");
    std::string one = sweep_csv(cfg, threshold_sweep(cfg, 1));
    std::string three = sweep_csv(cfg, threshold_sweep(cfg, 3));
    std::string four = sweep_csv(cfg, threshold_sweep(cfg, 4));
    if (one != three || one != four)
        out.fail("worker count changed the report bytes");
    else
        out.note(text("%zu-byte report identical across 1, 3, 4 workers", one.size()));
}

// A10: the dense and skip sampling paths agree in distribution, per-slot and
// on the edge-count histogram, at significance 1e-3.
void sampler_distribution(Outcome& out, std::uint64_t seed) {
    const int n = 6;
    const double p = 0.1;
    const std::int64_t trials = 1000000;
    const int slots = 15;

    auto tally = [&](bool dense, std::vector<double>& slot_counts, std::vector<double>& hist,
                     std::uint64_t master) {
        for (std::int64_t t = 0; t < trials; ++t) {
            SeedLineage lineage = derive_stream(master, (std::uint64_t)t);
            Graph g = dense ? sample_gnp_dense(n, p, lineage) : sample_gnp_skip(n, p, lineage);
            hist[(std::size_t)g.edge_count()] += 1.0;
            int s = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++s)
                    if (g.has_edge(u, v)) slot_counts[(std::size_t)s] += 1.0;
        }
    };
    std::vector<double> slot_dense(slots, 0.0), slot_skip(slots, 0.0);
    std::vector<double> hist_dense(slots + 1, 0.0), hist_skip(slots + 1, 0.0);
    tally(true, slot_dense, hist_dense, seed * 2 + 1);
    tally(false, slot_skip, hist_skip, seed * 2 + 2);

    double slot_chi = 0.0;
    for (int s = 0; s < slots; ++s) {
        std::vector<double> a{slot_dense[s], (double)trials - slot_dense[s]};
        std::vector<double> b{slot_skip[s], (double)trials - slot_skip[s]};
        slot_chi += two_sample_chi_square(a, b).chi_square;
    }
    double slot_p = chi_square_survival(slot_chi, slots);
    if (slot_p > 1e-3)
        out.note(text("per-slot inclusion: chi-square %.1f (df %d), p = %.3f", slot_chi, slots,
                      slot_p));
    else
        out.fail(text("per-slot inclusion: chi-square %.1f (df %d), p = %.2e <= 1e-3", slot_chi,
                      slots, slot_p));

    ChiSquareResult hist_res = two_sample_chi_square(hist_dense, hist_skip);
    if (hist_res.p_value > 1e-3)
        out.note(text("edge-count histogram: chi-square %.1f (df %d), p = %.3f",
                      hist_res.chi_square, hist_res.df, hist_res.p_value));
    else
        out.fail(text("edge-count histogram: chi-square %.1f (df %d), p = %.2e <= 1e-3",
                      hist_res.chi_square, hist_res.df, hist_res.p_value));
}

}  // namespace

int main() {
    std::printf("raagprobe %s acceptance suite\n", kVersion);
    Harness h;
    h.run("A1  enumeration oracle matches the closed forms to 1e-9", 10, closed_forms_vs_enumeration);
    h.run("A2  fixture graphs classify exactly", 0, fixture_checks);
    h.run("A3  domination counts are complement-duals", 30, duality);
    h.run("A4  forcing properties survive exhaustive + sampled fuzzing", 60, forcing);
    h.run("A5  bounds and envelopes dominate; corner ratios near limits", 60, bound_and_corner_audit);
    h.run_statistical("A6  monte carlo means within four standard errors", 300, 60001, monte_carlo_clt);
    h.run_statistical("A7  existence trends across the threshold family", 600, 70001, threshold_shadow);
    h.run_statistical("A8  finite-verdict frequency non-decreasing at p=1/2", 300, 80001, finiteness_shadow);
    h.run("A9  sweep reports byte-identical across worker counts", 0, determinism);
    h.run_statistical("A10 dense and skip sampler paths agree in distribution", 120, 100001, sampler_distribution);

    if (h.failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion%s failed\n", h.failures, h.failures == 1 ? "" : "s");
    return 1;
}
