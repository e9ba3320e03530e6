#pragma once

#include <cstddef>
#include <vector>

namespace raagprobe {

// Fixed-shape tree summation: the result depends only on the values and their
// order, never on how the work that produced them was scheduled.
double pairwise_sum(const double* data, std::size_t count);
double pairwise_sum(const std::vector<double>& data);

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;  // unbiased (divides by count-1); 0 for count < 2
};
MeanVariance mean_variance(const std::vector<double>& data);

// Upper tail of the chi-square distribution: P(X >= x) with df degrees.
double chi_square_survival(double x, double df);

struct ChiSquareResult {
    double chi_square = 0.0;
    int df = 0;
    double p_value = 1.0;
};
// Homogeneity test of two histograms over the same bins (2 x K table).
// Bins empty in both samples are dropped from df.
ChiSquareResult two_sample_chi_square(const std::vector<double>& observed1,
                                      const std::vector<double>& observed2);

}
