#pragma once

#include <cstddef>
#include <vector>

namespace fksmc {

// Reverse-kernel noise scale. `beta` (sigma_t^2 = beta_t) is exact when each
// data mode has unit covariance and is the default; `posterior` is the
// conditional variance beta_t * (1 - abar(t-1)) / (1 - abar(t)), exact for
// point-mass data.
enum class SigmaRule { beta, posterior };

// Per-step variances beta_t for t = 1..T plus the derived cumulative products
// abar(t) = prod_{j<=t} (1 - beta_j) and reverse noise scales sigma_t.
class NoiseSchedule {
 public:
  NoiseSchedule(std::vector<double> betas, SigmaRule rule = SigmaRule::beta);

  // Linear ramp from beta_start to beta_end over T steps. The defaults rescale
  // the usual 1000-step DDPM endpoints to T steps.
  static NoiseSchedule linear(std::size_t steps, SigmaRule rule = SigmaRule::beta);
  static NoiseSchedule linear(std::size_t steps, double beta_start, double beta_end,
                              SigmaRule rule = SigmaRule::beta);

  std::size_t steps() const { return betas_.size(); }

  double beta(std::size_t t) const;       // t in [1, T]
  double alpha_bar(std::size_t t) const;  // t in [0, T], alpha_bar(0) == 1
  double sigma(std::size_t t) const;      // t in [1, T]

  SigmaRule sigma_rule() const { return rule_; }

 private:
  std::vector<double> betas_;
  std::vector<double> alpha_bars_;  // size T + 1
  std::vector<double> sigmas_;      // size T, sigmas_[t-1] = sigma_t
  SigmaRule rule_;
};

inline double alpha_bar(const NoiseSchedule& schedule, std::size_t t) {
  return schedule.alpha_bar(t);
}

}  // namespace fksmc
