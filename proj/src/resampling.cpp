#include "fksmc/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

namespace {

void check_normalized(const std::vector<double>& weights) {
  if (weights.empty()) throw ContractError("resample: empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ContractError("resample: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ContractError("resample: weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

std::vector<std::size_t> systematic_resample(const std::vector<double>& weights, std::size_t m,
                                             double u) {
  check_normalized(weights);
  if (m == 0) throw ContractError("resample: output count must be at least 1");
  std::vector<std::size_t> out;
  out.reserve(m);
  const double step = 1.0 / static_cast<double>(m);
  double cumulative = weights[0];
  std::size_t i = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double point = u + static_cast<double>(k) * step;
    while (point >= cumulative && i + 1 < weights.size()) {
      ++i;
      cumulative += weights[i];
    }
    out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> systematic_resample(const std::vector<double>& weights, std::size_t m,
                                             RngStream& rng) {
  return systematic_resample(weights, m, rng.uniform() / static_cast<double>(m));
}

std::vector<std::size_t> multinomial_resample(const std::vector<double>& weights, std::size_t m,
                                              RngStream& rng) {
  check_normalized(weights);
  if (m == 0) throw ContractError("resample: output count must be at least 1");
  std::vector<std::size_t> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t pick = weights.size() - 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      cumulative += weights[i];
      if (u < cumulative) {
        pick = i;
        break;
      }
    }
    out.push_back(pick);
  }
  return out;
}

std::vector<std::size_t> resample(Resampler kind, const std::vector<double>& weights,
                                  std::size_t m, RngStream& rng) {
  return kind == Resampler::systematic ? systematic_resample(weights, m, rng)
                                       : multinomial_resample(weights, m, rng);
}

std::vector<std::size_t> top_k_select(const std::vector<double>& weights, std::size_t k) {
  if (k == 0 || k > weights.size()) {
    throw ConfigError("top_k_select: K=" + std::to_string(k) + " with N=" +
                      std::to_string(weights.size()));
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> svdd_select(const std::vector<double>& weights,
                                     const std::vector<int>& groups, std::size_t k) {
  if (weights.size() != groups.size()) {
    throw ContractError("svdd_select: group labels do not match weights");
  }
  // Group members in original order.
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < groups.size(); ++i) members[groups[i]].push_back(i);
  std::map<int, std::vector<std::size_t>> survivors;
  for (const auto& [g, idx] : members) {
    if (idx.empty()) throw ConfigError("svdd_select: empty group");
    if (k > idx.size()) {
      throw ConfigError("svdd_select: K=" + std::to_string(k) + " exceeds group size " +
                        std::to_string(idx.size()));
    }
    std::vector<std::size_t> order = idx;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
    order.resize(k);
    std::sort(order.begin(), order.end());
    survivors[g] = std::move(order);
  }
  // Each original slot is refilled by its group's survivors, cycling through
  // them in index order.
  std::map<int, std::size_t> used;
  std::vector<std::size_t> out(weights.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& s = survivors[groups[i]];
    out[i] = s[used[groups[i]]++ % s.size()];
  }
  return out;
}

}  // namespace fksmc
