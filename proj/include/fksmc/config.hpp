#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fksmc/engine.hpp"
#include "fksmc/oracle.hpp"

namespace fksmc {

enum class ExperimentKind {
  single_run,
  compare,
  rank_correlation,
  timing_sweep,
  nfe_scaling,
  funnel_sweep,
  convergence,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);

// Fully resolved run configuration. Defaults reproduce the standard protocol:
// 30 steps, events at {10,15,20,25,29}, 240 evaluations, lambda = 10.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::single_run;
  std::string suite = "two-mode";
  std::vector<std::string> strategies = {"smc(d)"};

  std::size_t total_steps = 30;
  std::vector<std::size_t> resample_steps = {10, 15, 20, 25, 29};
  std::size_t uniform_count = 8;
  std::vector<std::size_t> funnel_counts = {12, 10, 6, 4, 4};

  double lambda = 10.0;
  std::string temperature = "constant";  // "constant" | "linear-adaptive"
  std::string potential = "diff";        // "diff" | "max"
  std::string resampler = "systematic";  // "systematic" | "multinomial"
  std::string sigma_rule = "beta";       // "beta" | "posterior"
  double guidance_scale = 7.5;           // carried, unused by the sampler
  std::size_t bfs_k = 4;
  std::size_t svdd_k = 1;
  std::size_t group_size = 4;

  std::uint64_t seed = 0;
  std::size_t seeds = 100;
  std::string out = "out";
  std::size_t workers = 1;

  GridSpec grid;
  std::size_t compare_resolution = 64;

  std::size_t batch = 16;
  std::size_t conditions = 100;
  std::vector<std::size_t> budgets = {1, 2, 4, 8, 16};
  std::vector<std::size_t> particle_counts = {8, 64, 512, 4096};
  std::size_t samples_per_count = 100000;
  std::size_t bootstrap_resamples = 1000;
  std::size_t timing_seeds = 400;

  void validate() const;

  // Seed of the i-th run in a multi-seed experiment.
  std::uint64_t run_seed(std::size_t index) const { return seed + index; }
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// Parse and validate a config document; unknown keys are rejected by name.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Resolve a strategy name ("best_of_n", "bfs", "svdd", "smc(d)", "smc(m)",
// "smc-a(d)", "smc-a(m)", "f-smc(d)", "f-smc(m)", "f-smc-a(d)", "f-smc-a(m)",
// or plain "smc"/"f-smc" honoring the config's potential/temperature keys)
// into a full StrategySpec at the config's budget.
StrategySpec make_strategy(const std::string& name, const RunConfig& config);

// Apply a preset schedule name ("uniformN" or "schedule1".."schedule5") or an
// explicit JSON object {"counts": [...], "resample_steps": [...], "T": n}.
void apply_schedule_setting(RunConfig& config, const nlohmann::json& value);

NoiseSchedule make_noise_schedule(const RunConfig& config);

}  // namespace fksmc
