#include "fksmc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

void StrategySpec::validate() const {
  schedule.validate();
  switch (method) {
    case SearchMethod::smc:
      if (selection.kind != SelectionKind::weighted_resample) {
        throw ConfigError("strategy " + name + ": smc requires weighted resampling");
      }
      break;
    case SearchMethod::bfs:
      if (selection.kind != SelectionKind::top_k) {
        throw ConfigError("strategy " + name + ": bfs requires top-k selection");
      }
      break;
    case SearchMethod::svdd:
      if (selection.kind != SelectionKind::svdd_group_top_k) {
        throw ConfigError("strategy " + name + ": svdd requires grouped top-k selection");
      }
      if (group_size == 0 || schedule.initial_count() % group_size != 0) {
        throw ConfigError("strategy " + name + ": group size must divide the particle count");
      }
      if (selection.k > group_size) {
        throw ConfigError("strategy " + name + ": K exceeds the group size");
      }
      break;
    case SearchMethod::best_of_n:
      if (selection.kind != SelectionKind::identity) {
        throw ConfigError("strategy " + name + ": best-of-n uses identity selection");
      }
      break;
  }
  if (selection.kind != SelectionKind::weighted_resample &&
      schedule.initial_count() != schedule.final_count()) {
    throw ConfigError("strategy " + name +
                      ": shrinking schedules require weighted resampling");
  }
  if (selection.kind == SelectionKind::top_k &&
      selection.k > schedule.initial_count()) {
    throw ConfigError("strategy " + name + ": K exceeds the particle count");
  }
}

std::size_t final_select_index(const std::vector<double>& rewards) {
  if (rewards.empty()) throw ContractError("final_select: empty candidate list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < rewards.size(); ++i) {
    if (rewards[i] > rewards[best]) best = i;
  }
  return best;
}

std::pair<StateVector, double> final_select(
    const std::vector<std::pair<StateVector, double>>& finals) {
  std::vector<double> rewards(finals.size());
  for (std::size_t i = 0; i < finals.size(); ++i) rewards[i] = finals[i].second;
  const std::size_t best = final_select_index(rewards);
  return finals[best];
}

namespace {

std::vector<double> last_rewards(const Population& pop) {
  std::vector<double> r(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) r[i] = pop.particles[i].last_reward;
  return r;
}

// Survivors in rank order, cycled to fill `m` slots.
std::vector<std::size_t> replicate_to(const std::vector<std::size_t>& survivors, std::size_t m) {
  std::vector<std::size_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = survivors[i % survivors.size()];
  return out;
}

}  // namespace

RunReport run_strategy(const StrategySpec& spec, const ToyDiffusionModel& model,
                       const NoiseSchedule& noise, const RewardFunction& reward,
                       std::uint64_t seed) {
  spec.validate();
  const std::size_t T = spec.schedule.total_steps;
  if (noise.steps() != T || model.steps() != T) {
    throw ConfigError("noise schedule and model must cover " + std::to_string(T) + " steps");
  }

  RunReport report;
  report.strategy = spec.name;
  report.seed = seed;

  Population pop =
      init_population(spec.schedule.initial_count(), model.dim(), seed, reward.lower_bound());
  if (spec.method == SearchMethod::svdd) {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      pop.particles[i].group = static_cast<int>(i / spec.group_size);
    }
  }
  pop.t = T;

  std::size_t nfe_used = 0;
  std::size_t reward_evals = 0;

  for (std::size_t step = 1; step <= T; ++step) {
    const std::size_t t = T - step + 1;
    const double lambda_t = adaptive_lambda(t, T, spec.temperature);
    if (pop.size() != spec.schedule.n_at(step)) {
      throw NumericError("population size drifted from the schedule at step " +
                         std::to_string(step));
    }

    double sum_r = 0.0;
    double max_r = -std::numeric_limits<double>::infinity();
    for (auto& p : pop.particles) {
      ReverseStepResult res = reverse_step(p.state, t, model, noise, p.rng);
      ++nfe_used;
      const double r = reward(res.x0_given_t);
      ++reward_evals;
      double factor = 0.0;
      if (step > 1 && spec.method == SearchMethod::smc) {
        if (spec.potential == PotentialKind::diff) {
          factor = diff_log_potential(r, lambda_t, p.last_reward, p.last_lambda);
        } else {
          p.running_max_reward = std::max(p.running_max_reward, r);
          factor = max_log_potential(p.running_max_reward, lambda_t);
        }
      }
      p.log_weight += factor;
      p.cumulative_log_potential += factor;
      p.last_reward = r;
      p.last_lambda = lambda_t;
      p.state = std::move(res.x_prev);
      if (spec.capture_traces) p.reward_history.push_back(r);
      sum_r += r;
      max_r = std::max(max_r, r);
    }
    pop.t = t - 1;
    pop.lambda_t = lambda_t;

    StepRecord rec;
    rec.step = step;
    rec.t = t;
    rec.count = pop.size();
    rec.lambda = lambda_t;
    rec.mean_reward = sum_r / static_cast<double>(pop.size());
    rec.max_reward = max_r;
    rec.ess = ess(pop);
    rec.resampled = spec.schedule.is_resample_step(step) &&
                    spec.selection.kind != SelectionKind::identity;
    report.steps.push_back(rec);
    pop.count_history.emplace_back(step, pop.size());

    if (spec.schedule.is_resample_step(step) &&
        spec.selection.kind != SelectionKind::identity) {
      const std::size_t m =
          step < T ? spec.schedule.n_at(step + 1) : spec.schedule.final_count();
      std::vector<std::size_t> parents;
      switch (spec.selection.kind) {
        case SelectionKind::weighted_resample: {
          std::vector<double> lw(pop.size());
          for (std::size_t i = 0; i < pop.size(); ++i) lw[i] = pop.particles[i].log_weight;
          std::vector<double> w;
          try {
            w = normalized_weights(lw);
          } catch (const DegeneratePopulationError&) {
            throw DegeneratePopulationError("all weights vanished at step " +
                                            std::to_string(step));
          }
          RngStream event_rng = RngStream::derive(seed, stream_salt::kResampleEvent, step);
          parents = resample(spec.selection.resampler, w, m, event_rng);
          break;
        }
        case SelectionKind::top_k:
          parents = replicate_to(top_k_select(last_rewards(pop), spec.selection.k), m);
          break;
        case SelectionKind::svdd_group_top_k: {
          std::vector<int> groups(pop.size());
          for (std::size_t i = 0; i < pop.size(); ++i) groups[i] = pop.particles[i].group;
          parents = svdd_select(last_rewards(pop), groups, spec.selection.k);
          break;
        }
        case SelectionKind::identity:
          break;
      }
      std::vector<Particle> children(parents.size());
      const double uniform = -std::log(static_cast<double>(parents.size()));
      for (std::size_t j = 0; j < parents.size(); ++j) {
        const Particle& src = pop.particles[parents[j]];
        children[j] = src;
        children[j].rng = RngStream::derive(seed, stream_salt::kChildParticle, step, j);
        children[j].log_weight = uniform;
        if (spec.selection.kind == SelectionKind::svdd_group_top_k) {
          children[j].group = pop.particles[j].group;  // labels stay with the slot
        }
      }
      pop.particles = std::move(children);
    }
  }

  // Final scoring at t = 0 plus the closing potential factor.
  const double lambda0 = adaptive_lambda(0, T, spec.temperature);
  std::vector<double> final_rewards(pop.size());
  report.finals.resize(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    Particle& p = pop.particles[i];
    const double r = reward(p.state);
    ++reward_evals;
    final_rewards[i] = r;
    double raw = p.log_weight;
    double corrected = raw;
    if (spec.method == SearchMethod::smc) {
      if (spec.potential == PotentialKind::diff) {
        const double factor = diff_log_potential(r, lambda0, p.last_reward, p.last_lambda);
        p.cumulative_log_potential += factor;
        raw += factor;
        corrected = raw;
      } else {
        corrected = raw + max_final_correction(p, lambda0, r);
      }
    }
    if (spec.capture_traces) {
      p.reward_history.push_back(r);
      report.reward_traces.push_back(p.reward_history);
    }
    report.finals[i] = FinalParticle{p.state, r, raw, corrected};
  }
  report.best_index = final_select_index(final_rewards);
  report.best_sample = pop.particles[report.best_index].state;
  report.best_reward = final_rewards[report.best_index];
  report.nfe_used = nfe_used;
  report.reward_evaluations = reward_evals;
  if (nfe_used != spec.schedule.nfe()) {
    throw NumericError("realized NFE " + std::to_string(nfe_used) +
                       " differs from the schedule budget " +
                       std::to_string(spec.schedule.nfe()));
  }
  return report;
}

RunReport run_strategy(const StrategySpec& spec, const ToySuite& suite, std::uint64_t seed) {
  const NoiseSchedule noise = NoiseSchedule::linear(spec.schedule.total_steps);
  const ToyDiffusionModel model(suite.prior, noise);
  return run_strategy(spec, model, noise, suite.reward, seed);
}

}  // namespace fksmc
