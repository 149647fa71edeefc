#include "hfsim/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hfsim/quadrature.hpp"

namespace hfsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TheoryInputs TheoryInputs::from_config(const SystemConfig& cfg, double sigma1_sq,
                                       double sigma2_sq) {
  TheoryInputs t;
  t.sigma1_sq = sigma1_sq;
  t.sigma2_sq = sigma2_sq;
  t.speed_mps = cfg.ue_speed_mps;
  t.carrier_freq_hz = cfg.carrier_freq_hz;
  t.subcarrier_spacing_hz = cfg.subcarrier_spacing_hz;
  t.cell_radius_m = cfg.cell_radius_m;
  t.colocated = false;
  return t;
}

double mse_simplified(const TheoryInputs& t) {
  const double d = t.doppler_scale();
  const double stage1 = (t.colocated ? 1.0 : 2.0) * t.sigma1_sq;
  return stage1 + t.sigma2_sq + d * d;
}

double doppler_mse_integral(const TheoryInputs& t) {
  const double d = t.doppler_scale();
  if (d == 0.0) return 0.0;
  const double r_cell = t.cell_radius_m;
  if (r_cell <= 0.0) throw std::invalid_argument("doppler_mse_integral: cell radius must be positive");

  // Triple integral over the UE heading, the UE radius and the angular
  // position of the secondary AAU inside its boundary sector. Per-level
  // absolute tolerances land the combined result comfortably inside the
  // 1e-4 relative target.
  bool converged = true;
  double worst = 0.0;

  auto inner_theta = [&](double psi, double r) {
    const double rho = r / r_cell;
    auto f = [&](double theta) {
      const double xi = kTwoPi - theta - psi;
      const double c = std::cos(xi);
      const double root = std::sqrt(std::max(0.0, 1.0 - rho * rho * std::sin(theta) * std::sin(theta)));
      const double chord = rho * std::cos(theta) + root;
      return c * c * chord * chord;
    };
    const QuadratureResult q = adaptive_simpson(f, 0.0, kTwoPi, 1e-6);
    if (!q.converged) {
      converged = false;
      worst = std::max(worst, q.est_error);
    }
    return q.value / kTwoPi;
  };

  auto mid_r = [&](double psi) {
    auto f = [&](double r) { return inner_theta(psi, r); };
    const QuadratureResult q = adaptive_simpson(f, 0.0, r_cell, 1e-6 * r_cell);
    if (!q.converged) {
      converged = false;
      worst = std::max(worst, q.est_error / r_cell);
    }
    return q.value / r_cell;
  };

  const QuadratureResult outer = adaptive_simpson(mid_r, 0.0, kTwoPi, 1e-6 * kTwoPi);
  if (!outer.converged) {
    converged = false;
    worst = std::max(worst, outer.est_error / kTwoPi);
  }
  if (!converged) {
    std::ostringstream os;
    os << "doppler_mse_integral: quadrature did not reach tolerance, achieved ~" << worst;
    throw std::runtime_error(os.str());
  }
  const double sector_term = outer.value / kTwoPi;
  return d * d * (0.5 + sector_term);
}

ComplexityInputs ComplexityInputs::from_config(const SystemConfig& cfg, int n_aaus, int n_ues) {
  ComplexityInputs c;
  c.n_aaus = n_aaus > 0 ? n_aaus : cfg.n_aaus;
  c.n_ues = n_ues > 0 ? n_ues : cfg.n_ues;
  c.n_subcarriers = cfg.n_subcarriers;
  c.n_nulls = cfg.n_nulls();
  c.n_symbols = cfg.n_symbols;
  c.rho = cfg.grid_points;
  return c;
}

double complexity_hfs(const ComplexityInputs& c) {
  const double m = c.n_aaus;
  const double k = c.n_ues;
  const double nlog = c.n_subcarriers * std::log2(static_cast<double>(c.n_subcarriers));
  return static_cast<double>(c.n_symbols) * c.rho *
         ((m - 1.0) * (m - 1.0) + (m + k - 1.0) * (c.n_nulls + nlog) + k);
}

double complexity_music_baseline(const ComplexityInputs& c) {
  const double nlog = c.n_subcarriers * std::log2(static_cast<double>(c.n_subcarriers));
  return static_cast<double>(c.n_aaus) * c.n_ues * c.n_symbols * c.rho *
         (c.n_aaus + nlog + c.n_nulls);
}

double complexity_pbee(const ComplexityInputs& c) {
  const double half_m = std::ceil(c.n_aaus / 2.0);
  const double log_n = std::log2(static_cast<double>(c.n_subcarriers));
  return 6.0 * (c.epsilon + 1.0) * c.n_ues * c.n_symbols * c.n_subcarriers * half_m *
         (log_n + c.n_symbols);
}

}  // namespace hfsim
