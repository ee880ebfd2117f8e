#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fksmc/config.hpp"
#include "fksmc/engine.hpp"
#include "fksmc/oracle.hpp"

namespace fksmc {

// Run `jobs` independent closures over a bounded worker pool. Results must be
// written to preallocated slots keyed by job index so the output does not
// depend on the worker count.
void parallel_for(std::size_t jobs, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

nlohmann::json report_to_json(const RunReport& report, const RunConfig& config);
void write_steps_csv(std::ostream& os, const RunReport& report);

struct StrategyResult {
  std::string strategy;
  std::vector<double> best_rewards;  // indexed by seed offset
};

// best_reward per seed for one strategy; model/noise are shared across runs.
StrategyResult collect_best_rewards(const StrategySpec& spec, const ToyDiffusionModel& model,
                                    const NoiseSchedule& noise, const RewardFunction& reward,
                                    std::uint64_t seed0, std::size_t runs, std::size_t workers);

struct RankPoint {
  std::size_t t;
  double mean_rho;
};

// Mean Spearman correlation between step-t rewards and the final reward,
// across `conditions` reward conditions of `batch` independent chains each.
std::vector<RankPoint> rank_correlation_curve(const ToySuite& suite, const RunConfig& config);

struct TimingPoint {
  std::size_t step;  // 0 = no-resample baseline
  double mean_best;
  double ci_lo;
  double ci_hi;
};

// Mean final best reward when resampling exactly once, swept over the event
// step.
std::vector<TimingPoint> resample_timing_curve(const ToySuite& suite, const RunConfig& config);

struct ScalingPoint {
  std::string strategy;
  std::size_t budget_multiple;
  std::size_t nfe;
  double mean_best;
  double ci_lo;
  double ci_hi;
};

std::vector<ScalingPoint> nfe_scaling_table(const ToySuite& suite, const RunConfig& config);

// Schedule for `strategy` at `multiple` times the single-chain budget; throws
// ConfigError when the budget is not realizable with integer counts.
ParticleSchedule schedule_at_budget(const std::string& strategy, std::size_t multiple,
                                    const RunConfig& config);

struct FunnelPoint {
  std::size_t schedule_index;  // 1-based
  std::vector<std::size_t> counts;
  std::size_t nfe;
  double mean_best;
  double ci_lo;
  double ci_hi;
};

std::vector<FunnelPoint> funnel_sweep_table(const ToySuite& suite, const RunConfig& config);

struct ConvergencePoint {
  std::size_t particle_count;
  std::size_t runs;
  double tv;
};

struct ConvergenceReport {
  double oracle_z;
  double oracle_z_doubled;  // resolution-doubling self check
  std::vector<ConvergencePoint> points;
};

ConvergenceReport convergence_table(const ToySuite& suite, const RunConfig& config);

// Weighted empirical grid of final particles aggregated over `runs` seeds.
DensityGrid aggregate_final_distribution(const StrategySpec& spec, const ToyDiffusionModel& model,
                                         const NoiseSchedule& noise, const RewardFunction& reward,
                                         std::uint64_t seed0, std::size_t runs,
                                         const GridSpec& grid, std::size_t workers);

// Dispatch the configured experiment, write its reports under
// <out>/<experiment>/ and print per-strategy summary lines. Returns the
// process exit status.
int run_cli(const RunConfig& config);

}  // namespace fksmc
