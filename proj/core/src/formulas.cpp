#include "raagprobe/formulas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace raagprobe {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

// Closed forms are mathematically >= 0; tolerate only float-scale artifacts.
double clamp_expectation(double value) {
    if (value >= 0.0) return value;
    if (value > -1e-12) return 0.0;
    throw std::logic_error("expectation evaluated negative beyond float tolerance");
}

double int128_to_double(unsigned __int128 v) {
    return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(v >> 64)), 64) +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

}  // namespace

double log_choose(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k > n - k) k = n - k;
    if (k == 0) return 0.0;
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const auto factor = static_cast<unsigned __int128>(n - k + i);
        if (c > kMax / factor)
            return std::lgamma(static_cast<double>(n) + 1.0) -
                   std::lgamma(static_cast<double>(k) + 1.0) -
                   std::lgamma(static_cast<double>(n - k) + 1.0);
        c = c * factor / static_cast<unsigned __int128>(i);
    }
    return std::log(int128_to_double(c));
}

double expected_nonadjacent_domination_pairs(int n, double p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    check_probability(p, "p");
    const double q = 1.0 - p;
    return static_cast<double>(n) * (n - 1) * q * std::pow(p + q * q, n - 2);
}

double expected_adjacent_domination_pairs(int n, double p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    check_probability(p, "p");
    return expected_nonadjacent_domination_pairs(n, 1.0 - p);
}

double expected_domination_diamonds(int n, double p) {
    if (n < 4) throw std::invalid_argument("need n >= 4");
    check_probability(p, "p");
    const double q = 1.0 - p;
    const double ordered4 = static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3);
    return ordered4 * std::pow(p, 4) * q * q * std::pow(p + q * q, n - 4);
}

double expected_proper_star_k_separations(int n, double p, int k) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    check_probability(p, "p");
    if (k < 1 || k > n - 1) throw std::invalid_argument("separation size out of range");
    if (p <= 0.0 || p >= 1.0) return 0.0;
    // n <= k + 2: the complement of any star is too small to leave both S and
    // an attached remainder, and the bracket below vanishes identically
    if (n - k - 1 <= 1) return 0.0;
    const double q = 1.0 - p;
    const double e = static_cast<double>(n - k - 1);
    // bracket = A - T1 - T2 + T1*T2 with A = (p+q^{k+1})^e >= max(T1, T2),
    // T1 = p^e, T2 = q^{k e}; rewrite as A * (1 - s) with every exp() arg <= 0.
    const double la = e * std::log(p + std::pow(q, k + 1));
    const double lt1 = e * std::log(p);
    const double lt2 = static_cast<double>(k) * e * std::log(q);
    const double s = std::exp(lt1 - la) + std::exp(lt2 - la) - std::exp(lt1 + lt2 - la);
    if (s >= 1.0) return 0.0;
    const double log_value = std::log(static_cast<double>(n)) + log_choose(n - 1, k) +
                             k * std::log(q) + la + std::log1p(-s);
    return clamp_expectation(std::exp(log_value));
}

double star_sep_bound_A(int n, double p, int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n < k + 2) throw std::invalid_argument("need n >= k + 2");
    check_probability(p, "p");
    const double q = 1.0 - p;
    const double log_value = 2.0 * std::log(static_cast<double>(n)) + log_choose(n - 1, k) +
                             (2 * k + 1) * std::log(q) +
                             (n - k - 2) * std::log(p + std::pow(q, k + 1));
    return std::exp(log_value);
}

double star_sep_bound_B(int n, double p, int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n < k + 2) throw std::invalid_argument("need n >= k + 2");
    check_probability(p, "p");
    const double q = 1.0 - p;
    const double log_value = std::log(static_cast<double>(k)) +
                             2.0 * std::log(static_cast<double>(n)) + log_choose(n - 1, k) +
                             (k + 1) * std::log(q) + 2.0 * std::log(p) +
                             (n - k - 2) * std::log(p + std::pow(q, k + 1));
    return std::exp(log_value);
}

double convexity_bound_F(int k, double x, double y) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (!(x > k + 1)) throw std::invalid_argument("need x > k + 1");
    check_probability(y, "y");
    const double log_value = (k + 1) * std::log(x) +
                             (x - k - 1) * std::log(y + std::pow(1.0 - y, k + 1));
    return std::exp(log_value);
}

namespace {

// ln( n^n / ((n-k)^{n-k} k^k) ), the entropy bound on ln C(n,k).
double log_entropy_prefactor(int k, int n) {
    return n * std::log(static_cast<double>(n)) -
           (n - k) * std::log(static_cast<double>(n - k)) -
           k * std::log(static_cast<double>(k));
}

}  // namespace

double highp_envelope_F(int k, int n, double q) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n < 2 * k) throw std::invalid_argument("need n >= 2k");
    check_probability(q, "q");
    const double log_value = log_entropy_prefactor(k, n) +
                             2.0 * std::log(static_cast<double>(n)) +
                             (2 * k + 1) * std::log(q) +
                             (n - k - 2) * std::log(1.0 - q + std::pow(q, k + 1));
    return std::exp(log_value);
}

double envelope_G(int k, int n, double p) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n < 2 * k) throw std::invalid_argument("need n >= 2k");
    check_probability(p, "p");
    const double q = 1.0 - p;
    const double log_value = log_entropy_prefactor(k, n) + std::log(static_cast<double>(k)) +
                             2.0 * std::log(static_cast<double>(n)) + 2.0 * std::log(p) +
                             (k + 1) * std::log(q) +
                             (n - k - 2) * std::log(p + std::pow(q, k + 1));
    return std::exp(log_value);
}

double threshold(int n) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    const double ln = std::log(static_cast<double>(n));
    return (ln + std::log(ln)) / n;
}

ThresholdWindow threshold_window(int n, double omega1, double omega2) {
    if (omega1 < 0.0 || omega2 < 0.0) throw std::invalid_argument("margins must be >= 0");
    const double t = threshold(n);
    ThresholdWindow w;
    w.n = n;
    w.omega1 = omega1;
    w.omega2 = omega2;
    w.lo = t + omega1 / n;
    w.hi = 1.0 - t - omega2 / n;
    if (w.lo >= w.hi) throw std::invalid_argument("margins close the window (lo >= hi)");
    return w;
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::NearEdgeless: return "NearEdgeless";
        case Regime::SparseInfinite: return "SparseInfinite";
        case Regime::Window: return "Window";
        case Regime::DenseInfinite: return "DenseInfinite";
        case Regime::NearComplete: return "NearComplete";
    }
    return "?";
}

RegimeLabel classify_regime(int n, double p, double omega) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    check_probability(p, "p");
    if (omega < 0.0) throw std::invalid_argument("need omega >= 0");
    const double nsq = static_cast<double>(n) * n;
    RegimeLabel out;
    if (omega > 0.0 && p * nsq <= 1.0 / omega) {
        out.regime = Regime::NearEdgeless;
        out.expect_nonadjacent_pairs = true;
    } else if (omega > 0.0 && (1.0 - p) * nsq <= 1.0 / omega) {
        out.regime = Regime::NearComplete;
        out.expect_adjacent_pairs = true;
    } else {
        const double t = threshold(n);
        if (t + omega / n < p && p < 1.0 - t - omega / n) {
            out.regime = Regime::Window;
        } else if (p <= 0.5) {
            out.regime = Regime::SparseInfinite;
            out.expect_adjacent_pairs = p * nsq >= omega;
            out.expect_nonadjacent_pairs = true;
        } else {
            out.regime = Regime::DenseInfinite;
            out.expect_adjacent_pairs = true;
            out.expect_nonadjacent_pairs = (1.0 - p) * nsq >= omega;
        }
    }
    return out;
}

ExpectationPoint expectation_point(int n, double p, std::optional<int> k) {
    ExpectationPoint pt;
    pt.n = n;
    pt.p = p;
    pt.k = k;
    pt.e_nonadj_dom = expected_nonadjacent_domination_pairs(n, p);
    pt.e_adj_dom = expected_adjacent_domination_pairs(n, p);
    if (n >= 4) pt.e_diamonds = expected_domination_diamonds(n, p);
    if (k) pt.e_proper_star_k = expected_proper_star_k_separations(n, p, *k);
    return pt;
}

}
