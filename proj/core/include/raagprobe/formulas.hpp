#pragma once

#include <cstdint>
#include <optional>

namespace raagprobe {

// ln C(n, k). Exact 128-bit integer arithmetic while it fits, log-gamma
// beyond; the two paths agree to ~1e-15 relative at the crossover.
double log_choose(std::int64_t n, std::int64_t k);

// E[#non-adjacent domination pairs] over G(n,p): n(n-1)(1-p)(p+(1-p)^2)^{n-2}.
double expected_nonadjacent_domination_pairs(int n, double p);
// Complement-dual: equals expected_nonadjacent_domination_pairs(n, 1-p).
double expected_adjacent_domination_pairs(int n, double p);
// E[#domination diamonds]: n(n-1)(n-2)(n-3) p^4 (1-p)^2 (p+(1-p)^2)^{n-4}.
double expected_domination_diamonds(int n, double p);
// E[#proper star k-separations]:
//   n C(n-1,k) (1-p)^k [ (p+(1-p)^{k+1})^{n-k-1}
//                        + (1-p^{n-k-1})(1-(1-p)^{k(n-k-1)}) - 1 ].
// Evaluated in log space; tiny negative floating artifacts clamp to 0.
double expected_proper_star_k_separations(int n, double p, int k);

// Upper bounds on the k-separation expectation (n >= k+2):
//   A = n^2 C(n-1,k) (1-p)^{2k+1} (p+(1-p)^{k+1})^{n-k-2}
//   B = k n^2 C(n-1,k) (1-p)^{k+1} p^2 (p+(1-p)^{k+1})^{n-k-2}
double star_sep_bound_A(int n, double p, int k);
double star_sep_bound_B(int n, double p, int k);

// F(x,y) = x^{k+1} (y+(1-y)^{k+1})^{x-k-1}, for x > k+1, y in [0,1], k >= 1.
double convexity_bound_F(int k, double x, double y);

// Binomial-free envelopes via C(n-1,k) <= n^n / ((n-k)^{n-k} k^k), n >= 2k:
//   F(k,n,q) = n^n/((n-k)^{n-k} k^k)     n^2 q^{2k+1} (1-q+q^{k+1})^{n-k-2}
//   G(k,n,p) = n^n/((n-k)^{n-k} k^{k-1}) n^2 p^2 (1-p)^{k+1} (p+(1-p)^{k+1})^{n-k-2}
double highp_envelope_F(int k, int n, double q);
double envelope_G(int k, int n, double p);

// t(n) = (ln n + ln ln n)/n, for n >= 3.
double threshold(int n);

struct ThresholdWindow {
    int n = 0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double lo = 0.0;  // t(n) + omega1/n
    double hi = 1.0;  // 1 - t(n) - omega2/n
};
// Throws when the margins close the window (lo >= hi).
ThresholdWindow threshold_window(int n, double omega1, double omega2);

enum class Regime { NearEdgeless, SparseInfinite, Window, DenseInfinite, NearComplete };
const char* to_string(Regime regime);

// Finite-n reading of the asymptotic regime table, parameterized by a single
// margin omega >= 0:
//   NearEdgeless   iff omega > 0 and p n^2 <= 1/omega
//   NearComplete   iff omega > 0 and (1-p) n^2 <= 1/omega
//   Window         iff t(n) + omega/n < p < 1 - t(n) - omega/n (strict)
//   otherwise SparseInfinite (p <= 1/2) or DenseInfinite (p > 1/2),
// so boundary ties resolve toward the infinite labels. The sub-flags say
// whether adjacent / non-adjacent domination pairs are expected to exist.
struct RegimeLabel {
    Regime regime = Regime::Window;
    bool expect_adjacent_pairs = false;
    bool expect_nonadjacent_pairs = false;
};
RegimeLabel classify_regime(int n, double p, double omega);

struct ExpectationPoint {
    int n = 0;
    double p = 0.0;
    std::optional<int> k;
    double e_nonadj_dom = 0.0;
    double e_adj_dom = 0.0;
    std::optional<double> e_diamonds;      // n >= 4 only
    std::optional<double> e_proper_star_k; // present when k is
};
ExpectationPoint expectation_point(int n, double p, std::optional<int> k);

}
