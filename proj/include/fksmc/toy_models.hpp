#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fksmc/noise_schedule.hpp"
#include "fksmc/rng.hpp"
#include "fksmc/state.hpp"

namespace fksmc {

// Diagonal-covariance Gaussian mixture. Serves both as generative prior and as
// the shape behind log-density rewards; diagonal covariances keep the
// quadrature oracle and the noised-mixture score closed-form.
class GaussianMixture {
 public:
  struct Component {
    double weight;
    StateVector mean;
    StateVector var;  // per-axis variance
  };

  explicit GaussianMixture(std::vector<Component> components);

  std::size_t dim() const { return components_[0].mean.size(); }
  const std::vector<Component>& components() const { return components_; }

  double log_density(const StateVector& x) const;
  StateVector score(const StateVector& x) const;  // grad_x log density

  // The forward-noised mixture at step t: means sqrt(abar) * mu,
  // variances abar * var + (1 - abar).
  GaussianMixture noised(double abar) const;

  StateVector sample(RngStream& rng) const;

  // Exact mass inside an axis-aligned box (per-axis erf products).
  double mass_inside(const StateVector& lo, const StateVector& hi) const;

 private:
  std::vector<Component> components_;
  std::vector<double> log_weights_;
};

// Exact stand-in for a learned score network: precomputes the noised mixture
// at every step of a schedule so each score call is a table lookup plus a
// closed-form evaluation.
class ToyDiffusionModel {
 public:
  ToyDiffusionModel(GaussianMixture prior, const NoiseSchedule& schedule);

  const GaussianMixture& prior() const { return noised_[0]; }
  std::size_t dim() const { return noised_[0].dim(); }
  std::size_t steps() const { return noised_.size() - 1; }

  // grad_x log q_t(x) for t in [0, T].
  StateVector score(const StateVector& x, std::size_t t) const;
  const GaussianMixture& marginal(std::size_t t) const { return noised_.at(t); }

 private:
  std::vector<GaussianMixture> noised_;  // index t = 0..T
};

StateVector gmm_score(const GaussianMixture& mixture, const StateVector& x, std::size_t t,
                      const NoiseSchedule& schedule);

enum class RewardKind { gaussian_mixture_log_density, checkerboard_square_scores, constant, custom };

// A bounded reward r(x, c). Evaluation clamps into [lower, upper]; the bounds
// are part of the definition so every potential built from it stays finite.
class RewardFunction {
 public:
  RewardFunction(RewardKind kind, double lower, double upper,
                 std::function<double(const StateVector&)> raw, std::uint64_t condition = 0);

  double operator()(const StateVector& x) const;
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }
  RewardKind kind() const { return kind_; }
  std::uint64_t condition() const { return condition_; }

  static RewardFunction constant(double value, double lower = 0.0, double upper = 1.0);
  // r = clamp(1 + (log p_r(x) - peak) / span, 0, 1) where p_r is a mixture
  // density and peak its maximum component-center value.
  static RewardFunction gaussian_log_density(GaussianMixture reward_shape, double span,
                                             std::uint64_t condition = 0);

 private:
  RewardKind kind_;
  double lower_;
  double upper_;
  std::function<double(const StateVector&)> raw_;
  std::uint64_t condition_;
};

// n x n board of Gaussian bumps with one score per square.
RewardFunction checkerboard_reward(const std::vector<StateVector>& centers,
                                   const std::vector<double>& scores, double bump_sigma,
                                   double span, std::uint64_t condition = 0);

double checkerboard_reward(const StateVector& x, const RewardFunction& board);

// A matched prior/reward pair plus the condition family used by experiments.
struct ToySuite {
  std::string name;
  GaussianMixture prior;
  RewardFunction reward;  // condition 0
  std::size_t default_conditions;
  std::function<RewardFunction(std::uint64_t)> reward_for_condition;
};

// name in {"standard-normal", "two-mode", "checkerboard-4x4"}.
ToySuite make_toy_suite(const std::string& name, std::size_t dim = 2);

}  // namespace fksmc
