#include "fksmc/toy_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fksmc/errors.hpp"

namespace fksmc {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

double log_normal_axis(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (d * d / var + std::log(var) + kLog2Pi);
}

double log_sum_exp(const std::vector<double>& xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2_v<double>); }

}  // namespace

GaussianMixture::GaussianMixture(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ConfigError("mixture needs at least one component");
  const std::size_t d = components_[0].mean.size();
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.mean.size() != d || c.var.size() != d) {
      throw ConfigError("mixture components disagree on dimension");
    }
    if (!(c.weight > 0.0)) throw ConfigError("mixture weights must be positive");
    for (double v : c.var) {
      if (!(v > 0.0)) throw ConfigError("mixture variances must be positive");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConfigError("mixture weights sum to " + std::to_string(total) + ", expected 1");
  }
  log_weights_.reserve(components_.size());
  for (const auto& c : components_) log_weights_.push_back(std::log(c.weight));
}

double GaussianMixture::log_density(const StateVector& x) const {
  std::vector<double> terms(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    double t = log_weights_[k];
    for (std::size_t i = 0; i < x.size(); ++i) {
      t += log_normal_axis(x[i], components_[k].mean[i], components_[k].var[i]);
    }
    terms[k] = t;
  }
  return log_sum_exp(terms);
}

StateVector GaussianMixture::score(const StateVector& x) const {
  std::vector<double> terms(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    double t = log_weights_[k];
    for (std::size_t i = 0; i < x.size(); ++i) {
      t += log_normal_axis(x[i], components_[k].mean[i], components_[k].var[i]);
    }
    terms[k] = t;
  }
  const double lse = log_sum_exp(terms);
  StateVector g(x.size(), 0.0);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const double resp = std::exp(terms[k] - lse);
    for (std::size_t i = 0; i < x.size(); ++i) {
      g[i] -= resp * (x[i] - components_[k].mean[i]) / components_[k].var[i];
    }
  }
  return g;
}

GaussianMixture GaussianMixture::noised(double abar) const {
  const double root = std::sqrt(abar);
  std::vector<Component> out = components_;
  for (auto& c : out) {
    for (std::size_t i = 0; i < c.mean.size(); ++i) {
      c.mean[i] *= root;
      c.var[i] = abar * c.var[i] + (1.0 - abar);
    }
  }
  return GaussianMixture(std::move(out));
}

StateVector GaussianMixture::sample(RngStream& rng) const {
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t pick = components_.size() - 1;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    acc += components_[k].weight;
    if (u < acc) {
      pick = k;
      break;
    }
  }
  const auto& c = components_[pick];
  StateVector x(c.mean.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = c.mean[i] + std::sqrt(c.var[i]) * rng.normal();
  }
  return x;
}

double GaussianMixture::mass_inside(const StateVector& lo, const StateVector& hi) const {
  double mass = 0.0;
  for (const auto& c : components_) {
    double m = c.weight;
    for (std::size_t i = 0; i < c.mean.size(); ++i) {
      const double sd = std::sqrt(c.var[i]);
      m *= normal_cdf((hi[i] - c.mean[i]) / sd) - normal_cdf((lo[i] - c.mean[i]) / sd);
    }
    mass += m;
  }
  return mass;
}

ToyDiffusionModel::ToyDiffusionModel(GaussianMixture prior, const NoiseSchedule& schedule) {
  noised_.reserve(schedule.steps() + 1);
  for (std::size_t t = 0; t <= schedule.steps(); ++t) {
    noised_.push_back(prior.noised(schedule.alpha_bar(t)));
  }
}

StateVector ToyDiffusionModel::score(const StateVector& x, std::size_t t) const {
  return noised_.at(t).score(x);
}

StateVector gmm_score(const GaussianMixture& mixture, const StateVector& x, std::size_t t,
                      const NoiseSchedule& schedule) {
  return mixture.noised(schedule.alpha_bar(t)).score(x);
}

RewardFunction::RewardFunction(RewardKind kind, double lower, double upper,
                               std::function<double(const StateVector&)> raw,
                               std::uint64_t condition)
    : kind_(kind), lower_(lower), upper_(upper), raw_(std::move(raw)), condition_(condition) {
  if (!(lower_ <= upper_) || !std::isfinite(lower_) || !std::isfinite(upper_)) {
    throw ConfigError("reward bounds must be finite with lower <= upper");
  }
}

double RewardFunction::operator()(const StateVector& x) const {
  return std::clamp(raw_(x), lower_, upper_);
}

RewardFunction RewardFunction::constant(double value, double lower, double upper) {
  return RewardFunction(RewardKind::constant, lower, upper,
                        [value](const StateVector&) { return value; });
}

RewardFunction RewardFunction::gaussian_log_density(GaussianMixture reward_shape, double span,
                                                    std::uint64_t condition) {
  if (!(span > 0.0)) throw ConfigError("reward span must be positive");
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& c : reward_shape.components()) {
    peak = std::max(peak, reward_shape.log_density(c.mean));
  }
  auto shape = std::make_shared<GaussianMixture>(std::move(reward_shape));
  return RewardFunction(
      RewardKind::gaussian_mixture_log_density, 0.0, 1.0,
      [shape, peak, span](const StateVector& x) {
        return 1.0 + (shape->log_density(x) - peak) / span;
      },
      condition);
}

RewardFunction checkerboard_reward(const std::vector<StateVector>& centers,
                                   const std::vector<double>& scores, double bump_sigma,
                                   double span, std::uint64_t condition) {
  if (centers.empty() || centers.size() != scores.size()) {
    throw ConfigError("checkerboard needs one score per square");
  }
  const double inv_two_var = 1.0 / (2.0 * bump_sigma * bump_sigma);
  auto raw = [centers, scores, inv_two_var, span](const StateVector& x) {
    std::vector<double> terms(centers.size());
    for (std::size_t k = 0; k < centers.size(); ++k) {
      terms[k] = std::log(scores[k]) - squared_distance(x, centers[k]) * inv_two_var;
    }
    return 1.0 + log_sum_exp(terms) / span;
  };
  return RewardFunction(RewardKind::checkerboard_square_scores, 0.0, 1.0, std::move(raw),
                        condition);
}

double checkerboard_reward(const StateVector& x, const RewardFunction& board) {
  if (board.kind() != RewardKind::checkerboard_square_scores) {
    throw ContractError("reward is not a checkerboard");
  }
  return board(x);
}

namespace {

// Condition c places the reward mode on the mode circle at a golden-angle
// multiple, so any number of distinct "prompts" stays well spread.
RewardFunction two_mode_reward(std::uint64_t condition) {
  constexpr double kGoldenAngle = 2.399963229728653;
  const double theta = kGoldenAngle * static_cast<double>(condition);
  StateVector center{3.0 * std::cos(theta), 3.0 * std::sin(theta)};
  GaussianMixture shape({{1.0, center, {4.0, 4.0}}});
  return RewardFunction::gaussian_log_density(std::move(shape), 8.0, condition);
}

// Fixed 4x4 score board: distinct multiples of 1/16, low scores in the
// center squares, single maximum at (+3, +1).
const double kBoardScores[4][4] = {
    {0.5000, 0.3125, 0.4375, 0.8125},
    {0.3750, 0.0625, 0.1875, 1.0000},
    {0.6250, 0.1250, 0.2500, 0.5625},
    {0.8750, 0.6875, 0.7500, 0.9375},
};

std::vector<StateVector> board_centers() {
  const double ys[4] = {3.0, 1.0, -1.0, -3.0};
  const double xs[4] = {-3.0, -1.0, 1.0, 3.0};
  std::vector<StateVector> centers;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) centers.push_back({xs[c], ys[r]});
  }
  return centers;
}

RewardFunction board_reward(std::uint64_t condition) {
  std::vector<double> scores;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) scores.push_back(kBoardScores[r][c]);
  }
  std::rotate(scores.begin(), scores.begin() + (condition % scores.size()), scores.end());
  return checkerboard_reward(board_centers(), scores, 0.5, 10.0, condition);
}

}  // namespace

ToySuite make_toy_suite(const std::string& name, std::size_t dim) {
  if (name == "standard-normal") {
    GaussianMixture prior({{1.0, StateVector(dim, 0.0), StateVector(dim, 1.0)}});
    return ToySuite{name, std::move(prior), RewardFunction::constant(0.5), 1,
                    [](std::uint64_t c) {
                      auto r = RewardFunction::constant(0.5);
                      return RewardFunction(RewardKind::constant, r.lower_bound(),
                                            r.upper_bound(),
                                            [](const StateVector&) { return 0.5; }, c);
                    }};
  }
  if (name == "two-mode") {
    if (dim != 2) throw ConfigError("two-mode suite is two-dimensional");
    GaussianMixture prior({{0.5, {3.0, 0.0}, {1.0, 1.0}}, {0.5, {-3.0, 0.0}, {1.0, 1.0}}});
    return ToySuite{name, std::move(prior), two_mode_reward(0), 100, two_mode_reward};
  }
  if (name == "checkerboard-4x4") {
    if (dim != 2) throw ConfigError("checkerboard suite is two-dimensional");
    std::vector<GaussianMixture::Component> comps;
    for (const auto& c : board_centers()) {
      comps.push_back({1.0 / 16.0, c, {0.25, 0.25}});
    }
    GaussianMixture prior(std::move(comps));
    return ToySuite{name, std::move(prior), board_reward(0), 16, board_reward};
  }
  throw ConfigError("unknown toy suite: " + name);
}

}  // namespace fksmc
