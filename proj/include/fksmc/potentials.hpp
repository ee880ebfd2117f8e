#pragma once

#include <cstddef>

#include "fksmc/particles.hpp"

namespace fksmc {

enum class PotentialKind { diff, max };

enum class TemperatureKind { constant, linear_adaptive };

// Temperature policy for the tilt exp(lambda_t * r). Both kinds pin
// lambda_T = 0 (the first, uninformed reward never enters a potential) and
// lambda_0 = lambda0.
struct TemperaturePolicy {
  TemperatureKind kind = TemperatureKind::constant;
  double lambda0 = 10.0;
};

// lambda_t for t in [0, T]: constant -> lambda0 below T, 0 at T;
// linear-adaptive -> lambda0 * (T - t) / T.
double adaptive_lambda(std::size_t t, std::size_t total_steps, const TemperaturePolicy& policy);

// Diff potential factor: log G = lambda_t * r_t - lambda_prev * r_prev.
double diff_log_potential(double r_t, double lambda_t, double r_prev, double lambda_prev);

// Max potential factor: log G = lambda * max_{T > j >= t} r_j.
double max_log_potential(double running_max, double lambda);

// Final Max correction G_0: makes the lineage's total log-potential equal
// lambda * r(x_0) exactly.
double max_final_correction(const Particle& particle, double lambda, double final_reward);

}  // namespace fksmc
