#pragma once

#include <cstddef>
#include <vector>

namespace fksmc {

// Piecewise-constant particle counts over T denoising steps. `resample_steps`
// are 1-based step indices counted along the sampling direction (step 1
// consumes x_T); a selection event fires after the propagation of each listed
// step. `counts` holds one value per segment: counts[0] applies to steps
// 1..s_1, counts[i] to steps s_i+1..s_{i+1}, and the final count persists
// after the last event. This is the unique reading under which the funnel
// [12,10,6,4,4] with events {10,15,20,25,29} and T=30 spends exactly 240
// evaluations.
struct ParticleSchedule {
  std::size_t total_steps = 30;
  std::vector<std::size_t> resample_steps;  // strictly increasing, within [1, T]
  std::vector<std::size_t> counts;          // non-increasing; |counts| = max(1, |resample_steps|)

  void validate() const;

  // N_t at denoising step `step` in [1, T]; step 0 returns the final count.
  std::size_t n_at(std::size_t step) const;
  std::size_t initial_count() const { return counts.front(); }
  std::size_t final_count() const { return counts.back(); }
  bool is_resample_step(std::size_t step) const;

  // Total score-model evaluations: sum over steps of the live particle count.
  std::size_t nfe() const;

  static ParticleSchedule uniform(std::size_t count, std::size_t total_steps,
                                  std::vector<std::size_t> resample_steps);
  static ParticleSchedule funnel(std::vector<std::size_t> counts, std::size_t total_steps,
                                 std::vector<std::size_t> resample_steps);
};

std::size_t n_at(const ParticleSchedule& schedule, std::size_t step);
std::size_t nfe(const ParticleSchedule& schedule);

// The five stock equal-budget schedules used by the funnel sweep, from the
// flat [8,8,8,8,8] to the aggressive [14,10,6,2,2]; every one spends exactly
// 240 evaluations with events {10, 15, 20, 25, 29} over 30 steps.
std::vector<ParticleSchedule> funnel_sweep_schedules();

// Default event set {10, 15, 20, 25, 29} for T = 30.
std::vector<std::size_t> default_resample_steps();

}  // namespace fksmc
