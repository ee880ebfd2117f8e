#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fksmc/core_math.hpp"
#include "fksmc/particles.hpp"
#include "fksmc/potentials.hpp"
#include "fksmc/resampling.hpp"
#include "fksmc/schedules.hpp"
#include "fksmc/toy_models.hpp"

namespace fksmc {

enum class SearchMethod { best_of_n, bfs, svdd, smc };

// A fully resolved search strategy: which selection rule runs at the
// schedule's events, which potential accumulates into the weights, and how
// the temperature ramps.
struct StrategySpec {
  std::string name = "smc(d)";
  SearchMethod method = SearchMethod::smc;
  PotentialKind potential = PotentialKind::diff;
  TemperaturePolicy temperature;
  SelectionRule selection;
  ParticleSchedule schedule;
  double guidance_scale = 7.5;  // carried through configs and reports, unused
  std::size_t group_size = 4;   // grouped selection only
  bool capture_traces = false;  // retain per-particle reward histories

  void validate() const;
};

struct StepRecord {
  std::size_t step;   // denoising step, 1-based along the sampling direction
  std::size_t t;      // diffusion time consumed by this step (T - step + 1)
  std::size_t count;
  double lambda;
  double mean_reward;
  double max_reward;
  double ess;
  bool resampled;
};

struct FinalParticle {
  StateVector state;
  double reward;
  double log_weight;            // as accumulated by the run
  double log_weight_corrected;  // with the final potential factor applied
};

struct RunReport {
  std::string strategy;
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
  std::vector<FinalParticle> finals;
  std::size_t best_index = 0;
  StateVector best_sample;
  double best_reward = 0.0;
  std::size_t nfe_used = 0;
  std::size_t reward_evaluations = 0;
  // One reward trajectory per final particle (steps 1..T then the final
  // reward); filled only when capture_traces is set.
  std::vector<std::vector<double>> reward_traces;
};

// Argmax by reward; ties go to the lowest index.
std::pair<StateVector, double> final_select(
    const std::vector<std::pair<StateVector, double>>& finals);
std::size_t final_select_index(const std::vector<double>& rewards);

RunReport run_strategy(const StrategySpec& spec, const ToyDiffusionModel& model,
                       const NoiseSchedule& noise, const RewardFunction& reward,
                       std::uint64_t seed);

// Convenience: builds the model for the suite prior and the default linear
// noise schedule matching the strategy's step count.
RunReport run_strategy(const StrategySpec& spec, const ToySuite& suite, std::uint64_t seed);

}  // namespace fksmc
