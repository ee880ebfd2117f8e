#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "fksmc/rng.hpp"
#include "fksmc/state.hpp"

namespace fksmc {

struct Particle {
  StateVector state;                    // x_t
  double log_weight = 0.0;              // accumulated since the last resample
  double last_reward = 0.0;             // r_{t+1}, input to the Diff potential
  double last_lambda = 0.0;             // temperature that scaled last_reward
  double running_max_reward = 0.0;      // max reward along the lineage (Max potential)
  double cumulative_log_potential = 0.0;  // sum of log G over the whole lineage
  int group = 0;                        // grouped-selection label
  RngStream rng;                        // private stream; derived, never shared
  std::vector<double> reward_history;   // retained only for instrumented runs
};

struct Population {
  std::vector<Particle> particles;
  std::size_t t = 0;        // current diffusion step of the held states
  double lambda_t = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> count_history;  // (step, N)

  std::size_t size() const { return particles.size(); }
};

// N particles with states ~ N(0, I), uniform weights and reward statistics
// seeded at `initial_reward` (a reward function's lower bound).
Population init_population(std::size_t count, std::size_t dim, std::uint64_t master_seed,
                           double initial_reward = 0.0);

// Shift log-weights so the weights sum to one. Ordering is preserved; a
// population where every weight vanished is reported as degenerate.
void normalize_weights(Population& pop);

std::vector<double> normalized_weights(const std::vector<double>& log_weights);

// Effective sample size 1 / sum w_i^2 of the normalized weights.
double ess(const Population& pop);
double ess(const std::vector<double>& normalized);

// One CSV row per particle: step, index, coords..., weight, reward.
void write_population_csv(std::ostream& os, const Population& pop);

}  // namespace fksmc
