#ifndef HFSIM_ESTIMATOR_HPP
#define HFSIM_ESTIMATOR_HPP

#include "hfsim/config.hpp"
#include "hfsim/ofdm.hpp"

namespace hfsim {

/// Result of a one-dimensional null-subcarrier CFO search.
struct CfoEstimate {
  double value = 0.0;       // in [-0.5, 0.5]
  double cost_at_min = 0.0;
  int grid_points_used = 0;
  bool failed = false;      // degenerate (flat) cost surface
};

/// Null-subcarrier cost: total energy captured by the null DFT bins after
/// de-rotating each CP-stripped symbol body by phi_tilde. Zero at the true
/// CFO in the noise-free case.
double estimator_cost(const OfdmBurst& rx, const SubcarrierMap& map, double phi_tilde,
                      const SystemConfig& cfg);

/// Grid search of the cost over (-0.5, 0.5) with cfg.grid_points
/// cell-centered points, optionally refined by fitting a parabola through
/// the minimizer and its neighbors. Ties break toward the lowest index.
CfoEstimate estimate_cfo(const OfdmBurst& rx, const SubcarrierMap& map, const SystemConfig& cfg);

}  // namespace hfsim

#endif  // HFSIM_ESTIMATOR_HPP
