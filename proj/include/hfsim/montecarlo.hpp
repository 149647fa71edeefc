#ifndef HFSIM_MONTECARLO_HPP
#define HFSIM_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hfsim/analysis.hpp"
#include "hfsim/config.hpp"
#include "hfsim/schemes.hpp"

namespace hfsim {

/// Per-trial, per-scheme aggregate: the mean squared CFO error over all
/// M x K links plus the stage-wise records (HFS only; NaN otherwise).
struct TrialResult {
  int trial = 0;
  std::string scheme;
  double mse = 0.0;
  double stage1_mse = 0.0;
  double stage2_mse = 0.0;
  int failures = 0;
};

/// Empirical CDF: (value, cumulative probability) pairs, one per sample.
struct CdfTable {
  std::vector<double> values;  // nondecreasing
  std::vector<double> probs;   // i/T, strictly increasing to 1
};

/// Runs cfg.trials independent trials. Each trial derives its seed from
/// (master_seed, trial index), generates one topology and one channel set
/// shared by every scheme, and runs the requested schemes. Results are
/// ordered by trial then by scheme, independent of the worker count.
std::vector<TrialResult> run_experiment(const SystemConfig& cfg, const std::vector<Scheme>& schemes,
                                        int jobs = 0,
                                        const PointEstimator& estimator = music_estimator());

/// Reduce one scheme's links to a TrialResult.
TrialResult summarize_trial(const SchemeResult& r, int trial);

/// Sorted empirical CDF of the given MSE samples. Throws on empty input.
CdfTable make_cdf(std::vector<double> mse_values);

/// Extract the per-trial MSE series of one scheme from mixed results.
std::vector<double> scheme_mse_series(const std::vector<TrialResult>& results,
                                      const std::string& scheme);

/// One row of the theory-versus-simulation comparison.
struct SpeedPoint {
  double speed_mps = 0.0;
  double empirical_mse = 0.0;
  double theory_mse = 0.0;
  double abs_error = 0.0;
  double sigma1_sq = 0.0;  // measured stage-1 MSE
  double sigma2_sq = 0.0;  // measured stage-2 MSE
};

struct SpeedSweep {
  std::vector<SpeedPoint> points;
  std::vector<std::vector<TrialResult>> per_speed;  // HFS trial results per speed
};

/// For each speed, runs the HFS experiment, measures the stage-wise MSEs,
/// and compares the empirical link MSE against the closed-form prediction
/// fed with those measurements.
SpeedSweep theory_vs_sim(const SystemConfig& cfg, const std::vector<double>& speeds, int jobs = 0,
                         const PointEstimator& estimator = music_estimator());

double mean_of(const std::vector<double>& v);
double median_of(std::vector<double> v);

}  // namespace hfsim

#endif  // HFSIM_MONTECARLO_HPP
