#include "fksmc/core_math.hpp"

#include <cmath>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

StateVector forward_perturb(const StateVector& x0, std::size_t t, const NoiseSchedule& schedule,
                            RngStream& rng) {
  if (!all_finite(x0)) throw NumericError("forward_perturb: non-finite x0");
  const double abar = schedule.alpha_bar(t);
  const double signal = std::sqrt(abar);
  const double noise = std::sqrt(1.0 - abar);
  StateVector x(x0.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = signal * x0[i] + noise * rng.normal();
  }
  return x;
}

StateVector tweedie_from_score(const StateVector& x_t, const StateVector& score, std::size_t t,
                               const NoiseSchedule& schedule) {
  const double abar = schedule.alpha_bar(t);
  if (!(abar > 0.0)) throw NumericError("tweedie: alpha_bar(t) <= 0 at t=" + std::to_string(t));
  const double inv_root = 1.0 / std::sqrt(abar);
  StateVector x0(x_t.size());
  for (std::size_t i = 0; i < x0.size(); ++i) {
    x0[i] = inv_root * (x_t[i] + (1.0 - abar) * score[i]);
  }
  return x0;
}

StateVector tweedie(const StateVector& x_t, std::size_t t, const ToyDiffusionModel& model,
                    const NoiseSchedule& schedule) {
  return tweedie_from_score(x_t, model.score(x_t, t), t, schedule);
}

ReverseStepResult reverse_step(const StateVector& x_t, std::size_t t,
                               const ToyDiffusionModel& model, const NoiseSchedule& schedule,
                               RngStream& rng) {
  const StateVector score = model.score(x_t, t);
  if (!all_finite(score)) {
    std::string where = "reverse_step: non-finite score at t=" + std::to_string(t) + ", x=(";
    for (std::size_t i = 0; i < x_t.size(); ++i) {
      where += (i ? "," : "") + std::to_string(x_t[i]);
    }
    throw NumericError(where + ")");
  }
  const double beta = schedule.beta(t);
  const double inv_root_alpha = 1.0 / std::sqrt(1.0 - beta);
  const double sigma = schedule.sigma(t);
  ReverseStepResult out;
  out.x_prev.resize(x_t.size());
  for (std::size_t i = 0; i < x_t.size(); ++i) {
    const double mean = inv_root_alpha * (x_t[i] + beta * score[i]);
    out.x_prev[i] = sigma > 0.0 ? mean + sigma * rng.normal() : mean;
  }
  out.x0_given_t = tweedie_from_score(x_t, score, t, schedule);
  return out;
}

}  // namespace fksmc
