#include "fksmc/particles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fksmc/errors.hpp"
#include "fksmc/util.hpp"

namespace fksmc {

Population init_population(std::size_t count, std::size_t dim, std::uint64_t master_seed,
                           double initial_reward) {
  if (count == 0) throw ConfigError("population size must be at least 1");
  Population pop;
  pop.particles.resize(count);
  const double uniform = -std::log(static_cast<double>(count));
  for (std::size_t i = 0; i < count; ++i) {
    Particle& p = pop.particles[i];
    p.rng = RngStream::derive(master_seed, stream_salt::kInitParticle, i);
    p.state.resize(dim);
    for (auto& v : p.state) v = p.rng.normal();
    p.log_weight = uniform;
    p.last_reward = initial_reward;
    p.last_lambda = 0.0;
    p.running_max_reward = initial_reward;
    p.cumulative_log_potential = 0.0;
    p.group = 0;
  }
  return pop;
}

std::vector<double> normalized_weights(const std::vector<double>& log_weights) {
  double m = -std::numeric_limits<double>::infinity();
  for (double lw : log_weights) m = std::max(m, lw);
  if (!std::isfinite(m)) {
    throw DegeneratePopulationError("all particle weights vanished");
  }
  double sum = 0.0;
  std::vector<double> w(log_weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_weights[i] - m);
    sum += w[i];
  }
  for (auto& v : w) v /= sum;
  return w;
}

void normalize_weights(Population& pop) {
  std::vector<double> lw(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) lw[i] = pop.particles[i].log_weight;
  double m = -std::numeric_limits<double>::infinity();
  for (double v : lw) m = std::max(m, v);
  if (!std::isfinite(m)) throw DegeneratePopulationError("all particle weights vanished");
  double sum = 0.0;
  for (double v : lw) sum += std::exp(v - m);
  const double log_total = m + std::log(sum);
  for (auto& p : pop.particles) p.log_weight -= log_total;
}

double ess(const std::vector<double>& normalized) {
  double s = 0.0;
  for (double w : normalized) s += w * w;
  return 1.0 / s;
}

double ess(const Population& pop) {
  std::vector<double> lw(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) lw[i] = pop.particles[i].log_weight;
  return ess(normalized_weights(lw));
}

void write_population_csv(std::ostream& os, const Population& pop) {
  std::vector<double> lw(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) lw[i] = pop.particles[i].log_weight;
  const auto w = normalized_weights(lw);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    os << pop.t << ',' << i;
    for (double c : pop.particles[i].state) os << ',' << format_double(c);
    os << ',' << format_double(w[i]) << ',' << format_double(pop.particles[i].last_reward)
       << '\n';
  }
}

}  // namespace fksmc
