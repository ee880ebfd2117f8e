#include "fksmc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fksmc/errors.hpp"
#include "fksmc/util.hpp"

namespace fksmc {

DensityGrid::DensityGrid(GridSpec spec, std::vector<double> masses, double z)
    : spec_(spec), masses_(std::move(masses)), z_(z) {
  if (masses_.size() != spec_.resolution * spec_.resolution) {
    throw ContractError("grid mass vector does not match the resolution");
  }
}

std::size_t DensityGrid::cell_index(const StateVector& x) const {
  const double w = cell_width();
  const auto clamp_axis = [&](double v) {
    const auto idx = static_cast<long>(std::floor((v - spec_.lo) / w));
    return static_cast<std::size_t>(
        std::clamp<long>(idx, 0, static_cast<long>(spec_.resolution) - 1));
  };
  return clamp_axis(x[1]) * spec_.resolution + clamp_axis(x[0]);
}

double DensityGrid::mass_in_halfplane_x_positive() const {
  double m = 0.0;
  const double w = cell_width();
  for (std::size_t iy = 0; iy < spec_.resolution; ++iy) {
    for (std::size_t ix = 0; ix < spec_.resolution; ++ix) {
      const double cx = spec_.lo + (static_cast<double>(ix) + 0.5) * w;
      if (cx > 0.0) m += masses_[iy * spec_.resolution + ix];
    }
  }
  return m;
}

DensityGrid DensityGrid::downsample(std::size_t factor) const {
  if (factor == 0 || spec_.resolution % factor != 0) {
    throw ContractError("downsample factor must divide the resolution");
  }
  GridSpec coarse = spec_;
  coarse.resolution = spec_.resolution / factor;
  std::vector<double> masses(coarse.resolution * coarse.resolution, 0.0);
  for (std::size_t iy = 0; iy < spec_.resolution; ++iy) {
    for (std::size_t ix = 0; ix < spec_.resolution; ++ix) {
      masses[(iy / factor) * coarse.resolution + (ix / factor)] +=
          masses_[iy * spec_.resolution + ix];
    }
  }
  return DensityGrid(coarse, std::move(masses), z_);
}

void DensityGrid::write_matrix(std::ostream& os) const {
  for (std::size_t iy = 0; iy < spec_.resolution; ++iy) {
    for (std::size_t ix = 0; ix < spec_.resolution; ++ix) {
      if (ix) os << ' ';
      os << format_double(masses_[iy * spec_.resolution + ix]);
    }
    os << '\n';
  }
}

namespace {

DensityGrid evaluate_grid(const GaussianMixture& prior, const RewardFunction* reward,
                          double lambda, const GridSpec& spec) {
  if (prior.dim() != 2) throw ConfigError("grid oracle supports two dimensions");
  if (spec.resolution == 0 || !(spec.hi > spec.lo)) throw ConfigError("bad grid spec");
  const StateVector lo{spec.lo, spec.lo};
  const StateVector hi{spec.hi, spec.hi};
  const double covered = prior.mass_inside(lo, hi);
  if (covered < 1.0 - 1e-4) {
    throw CoverageError("grid covers only " + std::to_string(covered) + " of the prior mass",
                        covered);
  }
  const double w = (spec.hi - spec.lo) / static_cast<double>(spec.resolution);
  std::vector<double> log_vals(spec.resolution * spec.resolution);
  double max_log = -std::numeric_limits<double>::infinity();
  StateVector x(2);
  for (std::size_t iy = 0; iy < spec.resolution; ++iy) {
    x[1] = spec.lo + (static_cast<double>(iy) + 0.5) * w;
    for (std::size_t ix = 0; ix < spec.resolution; ++ix) {
      x[0] = spec.lo + (static_cast<double>(ix) + 0.5) * w;
      double lv = prior.log_density(x);
      if (reward) lv += lambda * (*reward)(x);
      log_vals[iy * spec.resolution + ix] = lv;
      max_log = std::max(max_log, lv);
    }
  }
  double sum = 0.0;
  for (double lv : log_vals) sum += std::exp(lv - max_log);
  const double log_total = max_log + std::log(sum);
  std::vector<double> masses(log_vals.size());
  for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = std::exp(log_vals[i] - log_total);
  // Z is the quadrature estimate of the tilted integral (cell area times the
  // unnormalized sum).
  const double z = std::exp(log_total) * w * w;
  return DensityGrid(spec, std::move(masses), z);
}

}  // namespace

DensityGrid tilted_target_grid(const GaussianMixture& prior, const RewardFunction& reward,
                               double lambda, const GridSpec& spec) {
  return evaluate_grid(prior, &reward, lambda, spec);
}

DensityGrid prior_grid(const GaussianMixture& prior, const GridSpec& spec) {
  return evaluate_grid(prior, nullptr, 0.0, spec);
}

double tv_distance(const DensityGrid& a, const DensityGrid& b) {
  if (a.spec().resolution != b.spec().resolution || a.spec().lo != b.spec().lo ||
      a.spec().hi != b.spec().hi) {
    throw ContractError("tv_distance: mismatched grids");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.masses().size(); ++i) {
    s += std::abs(a.masses()[i] - b.masses()[i]);
  }
  return 0.5 * s;
}

DensityGrid bin_samples(const std::vector<StateVector>& samples,
                        const std::vector<double>& weights, const GridSpec& spec) {
  if (samples.size() != weights.size()) {
    throw ContractError("bin_samples: one weight per sample required");
  }
  if (samples.empty()) throw ContractError("bin_samples: no samples");
  std::vector<double> masses(spec.resolution * spec.resolution, 0.0);
  DensityGrid shape(spec, masses, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    masses[shape.cell_index(samples[i])] += weights[i];
    total += weights[i];
  }
  if (!(total > 0.0)) throw ContractError("bin_samples: zero total weight");
  for (auto& m : masses) m /= total;
  return DensityGrid(spec, std::move(masses), total);
}

}  // namespace fksmc
