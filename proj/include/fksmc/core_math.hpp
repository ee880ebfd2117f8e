#pragma once

#include <cstddef>
#include <utility>

#include "fksmc/noise_schedule.hpp"
#include "fksmc/rng.hpp"
#include "fksmc/state.hpp"
#include "fksmc/toy_models.hpp"

namespace fksmc {

// Sample from the closed-form forward marginal
// x_t = sqrt(abar(t)) * x0 + sqrt(1 - abar(t)) * eps.
StateVector forward_perturb(const StateVector& x0, std::size_t t, const NoiseSchedule& schedule,
                            RngStream& rng);

// Tweedie denoised estimate from a known score value:
// x_{0|t} = (x_t + (1 - abar(t)) * score) / sqrt(abar(t)).
StateVector tweedie_from_score(const StateVector& x_t, const StateVector& score, std::size_t t,
                               const NoiseSchedule& schedule);

StateVector tweedie(const StateVector& x_t, std::size_t t, const ToyDiffusionModel& model,
                    const NoiseSchedule& schedule);

struct ReverseStepResult {
  StateVector x_prev;     // x_{t-1}
  StateVector x0_given_t;  // Tweedie estimate from x_t
};

// One ancestral reverse step. The single score evaluation is shared between
// the transition mean and the Tweedie estimate.
ReverseStepResult reverse_step(const StateVector& x_t, std::size_t t,
                               const ToyDiffusionModel& model, const NoiseSchedule& schedule,
                               RngStream& rng);

}  // namespace fksmc
