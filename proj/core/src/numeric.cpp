#include "raagprobe/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace raagprobe {

double pairwise_sum(const double* data, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

double pairwise_sum(const std::vector<double>& data) {
    return pairwise_sum(data.data(), data.size());
}

MeanVariance mean_variance(const std::vector<double>& data) {
    MeanVariance mv;
    if (data.empty()) return mv;
    mv.mean = pairwise_sum(data) / static_cast<double>(data.size());
    if (data.size() < 2) return mv;
    std::vector<double> sq(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double d = data[i] - mv.mean;
        sq[i] = d * d;
    }
    mv.variance = pairwise_sum(sq) / static_cast<double>(data.size() - 1);
    return mv;
}

namespace {

// Regularized incomplete gamma: series for P(a,x) when x < a+1, continued
// fraction (modified Lentz) for Q(a,x) otherwise.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double chi_square_survival(double x, double df) {
    if (df <= 0.0) throw std::invalid_argument("need df > 0");
    if (x <= 0.0) return 1.0;
    const double a = 0.5 * df;
    const double hx = 0.5 * x;
    if (hx < a + 1.0) return 1.0 - gamma_p_series(a, hx);
    return gamma_q_contfrac(a, hx);
}

ChiSquareResult two_sample_chi_square(const std::vector<double>& observed1,
                                      const std::vector<double>& observed2) {
    if (observed1.size() != observed2.size())
        throw std::invalid_argument("histograms must share bins");
    double n1 = 0.0;
    double n2 = 0.0;
    for (double v : observed1) n1 += v;
    for (double v : observed2) n2 += v;
    if (n1 <= 0.0 || n2 <= 0.0) throw std::invalid_argument("empty sample");
    ChiSquareResult r;
    int live_bins = 0;
    for (std::size_t b = 0; b < observed1.size(); ++b) {
        const double row = observed1[b] + observed2[b];
        if (row == 0.0) continue;
        ++live_bins;
        const double e1 = row * n1 / (n1 + n2);
        const double e2 = row * n2 / (n1 + n2);
        const double d1 = observed1[b] - e1;
        const double d2 = observed2[b] - e2;
        r.chi_square += d1 * d1 / e1 + d2 * d2 / e2;
    }
    r.df = live_bins - 1;
    r.p_value = r.df > 0 ? chi_square_survival(r.chi_square, static_cast<double>(r.df)) : 1.0;
    return r;
}

}
