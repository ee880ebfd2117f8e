#include "fksmc/potentials.hpp"

#include <stdexcept>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

double adaptive_lambda(std::size_t t, std::size_t total_steps, const TemperaturePolicy& policy) {
  if (t > total_steps) throw std::out_of_range("adaptive_lambda: t=" + std::to_string(t));
  if (t == total_steps) return 0.0;
  if (policy.kind == TemperatureKind::constant) return policy.lambda0;
  return policy.lambda0 * static_cast<double>(total_steps - t) / static_cast<double>(total_steps);
}

double diff_log_potential(double r_t, double lambda_t, double r_prev, double lambda_prev) {
  return lambda_t * r_t - lambda_prev * r_prev;
}

double max_log_potential(double running_max, double lambda) { return lambda * running_max; }

double max_final_correction(const Particle& particle, double lambda, double final_reward) {
  return lambda * final_reward - particle.cumulative_log_potential;
}

}  // namespace fksmc
