#include "fksmc/noise_schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

NoiseSchedule::NoiseSchedule(std::vector<double> betas, SigmaRule rule)
    : betas_(std::move(betas)), rule_(rule) {
  if (betas_.empty()) throw ConfigError("noise schedule needs at least one step");
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    // beta == 0 is allowed for the noiseless edge cases used in tests.
    if (!(betas_[i] >= 0.0) || betas_[i] >= 1.0) {
      throw ConfigError("beta_" + std::to_string(i + 1) + " = " + std::to_string(betas_[i]) +
                        " outside [0, 1)");
    }
  }
  const std::size_t T = betas_.size();
  alpha_bars_.resize(T + 1);
  alpha_bars_[0] = 1.0;
  for (std::size_t t = 1; t <= T; ++t) {
    alpha_bars_[t] = alpha_bars_[t - 1] * (1.0 - betas_[t - 1]);
  }
  sigmas_.resize(T);
  for (std::size_t t = 1; t <= T; ++t) {
    const double beta_t = betas_[t - 1];
    if (rule_ == SigmaRule::beta) {
      sigmas_[t - 1] = std::sqrt(beta_t);
    } else {
      const double denom = 1.0 - alpha_bars_[t];
      sigmas_[t - 1] =
          denom > 0.0 ? std::sqrt(beta_t * (1.0 - alpha_bars_[t - 1]) / denom) : 0.0;
    }
  }
}

NoiseSchedule NoiseSchedule::linear(std::size_t steps, SigmaRule rule) {
  const double scale = 1000.0 / static_cast<double>(steps);
  return linear(steps, 1e-4 * scale, 0.02 * scale, rule);
}

NoiseSchedule NoiseSchedule::linear(std::size_t steps, double beta_start, double beta_end,
                                    SigmaRule rule) {
  if (steps == 0) throw ConfigError("noise schedule needs at least one step");
  std::vector<double> betas(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double frac = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    betas[i] = beta_start + frac * (beta_end - beta_start);
  }
  return NoiseSchedule(std::move(betas), rule);
}

double NoiseSchedule::beta(std::size_t t) const {
  if (t < 1 || t > betas_.size()) throw std::out_of_range("beta: step " + std::to_string(t));
  return betas_[t - 1];
}

double NoiseSchedule::alpha_bar(std::size_t t) const {
  if (t > betas_.size()) throw std::out_of_range("alpha_bar: step " + std::to_string(t));
  return alpha_bars_[t];
}

double NoiseSchedule::sigma(std::size_t t) const {
  if (t < 1 || t > betas_.size()) throw std::out_of_range("sigma: step " + std::to_string(t));
  return sigmas_[t - 1];
}

}  // namespace fksmc
