#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "fksmc/state.hpp"
#include "fksmc/toy_models.hpp"

namespace fksmc {

struct GridSpec {
  double lo = -8.0;
  double hi = 8.0;
  std::size_t resolution = 256;  // cells per axis, two-dimensional grid
};

// Normalized cell masses on a regular 2-d grid, row-major over (ix, iy).
class DensityGrid {
 public:
  DensityGrid(GridSpec spec, std::vector<double> masses, double z);

  const GridSpec& spec() const { return spec_; }
  const std::vector<double>& masses() const { return masses_; }
  double z() const { return z_; }
  double cell_width() const { return (spec_.hi - spec_.lo) / static_cast<double>(spec_.resolution); }

  std::size_t cell_index(const StateVector& x) const;  // clamped to the grid edge
  double mass_in_halfplane_x_positive() const;

  // Merge factor x factor blocks; resolution must be divisible by factor.
  DensityGrid downsample(std::size_t factor) const;

  void write_matrix(std::ostream& os) const;

 private:
  GridSpec spec_;
  std::vector<double> masses_;
  double z_;
};

// Cell-center quadrature of p_prior(x) * exp(lambda * r(x)), normalized on the
// grid. Requires the grid to hold at least 1 - 1e-4 of the prior mass.
DensityGrid tilted_target_grid(const GaussianMixture& prior, const RewardFunction& reward,
                               double lambda, const GridSpec& spec);

// Prior restricted to the grid (lambda = 0 tilt).
DensityGrid prior_grid(const GaussianMixture& prior, const GridSpec& spec);

double tv_distance(const DensityGrid& a, const DensityGrid& b);

// Weighted empirical histogram on the same grid geometry. Weights need not be
// normalized; samples outside the box land in the nearest edge cell.
DensityGrid bin_samples(const std::vector<StateVector>& samples,
                        const std::vector<double>& weights, const GridSpec& spec);

}  // namespace fksmc
