#ifndef HFSIM_ANALYSIS_HPP
#define HFSIM_ANALYSIS_HPP

#include "hfsim/config.hpp"

namespace hfsim {

/// Inputs of the closed-form and integral MSE predictors.
struct TheoryInputs {
  double sigma1_sq = 0.0;  // stage-1 estimation MSE
  double sigma2_sq = 0.0;  // stage-2 estimation MSE
  double speed_mps = 0.0;
  double carrier_freq_hz = 2e9;
  double subcarrier_spacing_hz = 15e3;
  double cell_radius_m = 1000.0;
  bool colocated = false;  // master and secondary AAU are the same node

  double doppler_scale() const {
    return carrier_freq_hz * speed_mps / (kSpeedOfLight * subcarrier_spacing_hz);
  }

  static TheoryInputs from_config(const SystemConfig& cfg, double sigma1_sq, double sigma2_sq);
};

/// Closed-form per-link MSE prediction:
/// 2*sigma1^2 + sigma2^2 + (f v / (c df))^2, with the first coefficient
/// dropping to 1 when master and secondary are colocated.
double mse_simplified(const TheoryInputs& t);

/// Combined expected squared Doppler offset of a link pair (UE-to-master
/// plus UE-to-secondary) for a UE placed uniformly in the cell, evaluated
/// by nested adaptive quadrature over the sector geometry at relative
/// tolerance 1e-4. Throws std::runtime_error when the quadrature cannot
/// reach tolerance.
double doppler_mse_integral(const TheoryInputs& t);

/// Operation-count inputs for the complexity models.
struct ComplexityInputs {
  int n_aaus = 64;       // M
  int n_ues = 1;         // K
  int n_subcarriers = 32;  // N
  int n_nulls = 12;      // Q
  int n_symbols = 2;     // L_b
  int rho = 140;         // CFO search grid size of the null-subcarrier search
  int epsilon = 50;      // search count of the pairing-based benchmark

  static ComplexityInputs from_config(const SystemConfig& cfg, int n_aaus = 0, int n_ues = 0);
};

/// L_b*rho*((M-1)^2 + (M+K-1)(Q + N log2 N) + K)
double complexity_hfs(const ComplexityInputs& c);

/// M*K*L_b*rho*(M + N log2 N + Q)
double complexity_music_baseline(const ComplexityInputs& c);

/// 6*(eps+1)*K*L_b*N*ceil(M/2)*(log2 N + L_b)
double complexity_pbee(const ComplexityInputs& c);

}  // namespace hfsim

#endif  // HFSIM_ANALYSIS_HPP
