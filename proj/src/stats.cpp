#include "fksmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fksmc/errors.hpp"

namespace fksmc {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw ContractError("mean of empty vector");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw ContractError("variance needs at least two values");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

namespace {

// Average ranks (1-based) with ties sharing their midrank.
std::vector<double> midranks(const std::vector<double>& xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw ContractError("spearman: constant input has no defined rank correlation");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw ContractError("spearman: length mismatch");
  if (xs.size() < 2) throw ContractError("spearman: need at least two points");
  return pearson(midranks(xs), midranks(ys));
}

ConfidenceInterval bootstrap_mean_ci(const std::vector<double>& xs, std::size_t resamples,
                                     double alpha, RngStream& rng) {
  if (xs.empty()) throw ContractError("bootstrap of empty vector");
  std::vector<double> means(resamples);
  for (auto& m : means) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += xs[static_cast<std::size_t>(rng.uniform() * static_cast<double>(xs.size()))];
    }
    m = s / static_cast<double>(xs.size());
  }
  std::sort(means.begin(), means.end());
  const auto pick = [&](double q) {
    const double pos = q * static_cast<double>(means.size() - 1);
    return means[static_cast<std::size_t>(std::llround(pos))];
  };
  return ConfidenceInterval{pick(alpha / 2.0), pick(1.0 - alpha / 2.0)};
}

double paired_bootstrap_pvalue(const std::vector<double>& diffs, std::size_t resamples,
                               RngStream& rng) {
  if (diffs.empty()) throw ContractError("paired bootstrap of empty vector");
  std::size_t not_positive = 0;
  for (std::size_t b = 0; b < resamples; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      s += diffs[static_cast<std::size_t>(rng.uniform() * static_cast<double>(diffs.size()))];
    }
    if (s <= 0.0) ++not_positive;
  }
  return (static_cast<double>(not_positive) + 1.0) / (static_cast<double>(resamples) + 1.0);
}

KsResult ks_two_sample(std::vector<double> xs, std::vector<double> ys) {
  if (xs.empty() || ys.empty()) throw ContractError("ks test needs non-empty samples");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] <= v) ++i;
    while (j < ys.size() && ys[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  const double ne = std::sqrt(nx * ny / (nx + ny));
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  // Asymptotic Kolmogorov tail sum.
  double p = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += sign * term;
    sign = -sign;
    if (term < 1e-12) break;
  }
  p = std::clamp(2.0 * p, 0.0, 1.0);
  return KsResult{d, p};
}

}  // namespace fksmc
