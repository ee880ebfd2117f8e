#pragma once

#include <cstddef>
#include <vector>

#include "fksmc/rng.hpp"

namespace fksmc {

enum class Resampler { systematic, multinomial };

enum class SelectionKind { identity, top_k, svdd_group_top_k, weighted_resample };

struct SelectionRule {
  SelectionKind kind = SelectionKind::weighted_resample;
  std::size_t k = 1;                              // top-k variants
  Resampler resampler = Resampler::systematic;    // weighted_resample
};

// Systematic resampling: one uniform u in [0, 1/M), selection points
// u + k/M swept through the cumulative weights. M may differ from the input
// size (funnel downsizing). Offspring counts are floor(M w) or ceil(M w).
std::vector<std::size_t> systematic_resample(const std::vector<double>& weights, std::size_t m,
                                             double u);
std::vector<std::size_t> systematic_resample(const std::vector<double>& weights, std::size_t m,
                                             RngStream& rng);

// M independent categorical draws by inverse CDF.
std::vector<std::size_t> multinomial_resample(const std::vector<double>& weights, std::size_t m,
                                              RngStream& rng);

std::vector<std::size_t> resample(Resampler kind, const std::vector<double>& weights,
                                  std::size_t m, RngStream& rng);

// Indices of the K largest weights in ascending index order; ties go to the
// lowest index.
std::vector<std::size_t> top_k_select(const std::vector<double>& weights, std::size_t k);

// Per-group top-K replicated back to each group's size; result is aligned
// with the original particle positions so group labels carry over.
std::vector<std::size_t> svdd_select(const std::vector<double>& weights,
                                     const std::vector<int>& groups, std::size_t k);

}  // namespace fksmc
