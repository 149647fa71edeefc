#include "hfsim/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hfsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double estimator_cost(const OfdmBurst& rx, const SubcarrierMap& map, double phi_tilde,
                      const SystemConfig& cfg) {
  const int n = rx.n;
  std::vector<cplx> derot(n);
  const Dft dft(n);

  double j = 0.0;
  for (int g = 0; g < rx.n_symbols; ++g) {
    const cplx* body = rx.body(g);
    for (int i = 0; i < n; ++i) {
      const double a = -kTwoPi * phi_tilde * i / n;
      derot[i] = body[i] * cplx{std::cos(a), std::sin(a)};
    }
    for (const int q : map.null_indices) j += std::norm(dft.bin(derot.data(), q));
  }
  (void)cfg;
  return j;
}

CfoEstimate estimate_cfo(const OfdmBurst& rx, const SubcarrierMap& map, const SystemConfig& cfg) {
  const int rho = cfg.grid_points;
  CfoEstimate est;
  est.grid_points_used = rho;

  std::vector<double> grid(rho), cost(rho);
  for (int i = 0; i < rho; ++i) {
    grid[i] = -0.5 + (i + 0.5) / rho;
    cost[i] = estimator_cost(rx, map, grid[i], cfg);
  }

  int best = 0;
  for (int i = 1; i < rho; ++i) {
    if (cost[i] < cost[best]) best = i;
  }
  const double cmax = *std::max_element(cost.begin(), cost.end());

  // Flat surface (e.g. an all-zero burst) carries no CFO information.
  if (cmax <= 0.0 || (cmax - cost[best]) <= 1e-12 * cmax) {
    est.value = 0.0;
    est.cost_at_min = cost[best];
    est.failed = true;
    return est;
  }

  est.value = grid[best];
  est.cost_at_min = cost[best];

  if (cfg.refine && best > 0 && best + 1 < rho) {
    const double j0 = cost[best - 1];
    const double j1 = cost[best];
    const double j2 = cost[best + 1];
    const double denom = j0 - 2.0 * j1 + j2;
    if (denom > 0.0) {
      const double h = 1.0 / rho;
      double vertex = grid[best] + 0.5 * h * (j0 - j2) / denom;
      vertex = std::clamp(vertex, grid[best - 1], grid[best + 1]);
      est.value = vertex;
    }
  }
  return est;
}

}  // namespace hfsim
