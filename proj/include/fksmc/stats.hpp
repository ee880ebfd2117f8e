#pragma once

#include <cstddef>
#include <vector>

#include "fksmc/rng.hpp"

namespace fksmc {

double mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

struct ConfidenceInterval {
  double lo;
  double hi;
};

// Percentile bootstrap CI of the mean.
ConfidenceInterval bootstrap_mean_ci(const std::vector<double>& xs, std::size_t resamples,
                                     double alpha, RngStream& rng);

// One-sided paired bootstrap: p-value for H1 "mean(diffs) > 0".
double paired_bootstrap_pvalue(const std::vector<double>& diffs, std::size_t resamples,
                               RngStream& rng);

struct KsResult {
  double statistic;
  double p_value;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> xs, std::vector<double> ys);

}  // namespace fksmc
