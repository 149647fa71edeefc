#include "hfsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hfsim/rng.hpp"

namespace hfsim {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double nan_mean(const std::vector<double>& v, bool squared) {
  double acc = 0.0;
  int count = 0;
  for (const double x : v) {
    if (std::isnan(x)) continue;
    acc += squared ? x * x : x;
    ++count;
  }
  return count > 0 ? acc / count : kNan;
}
}  // namespace

TrialResult summarize_trial(const SchemeResult& r, int trial) {
  TrialResult t;
  t.trial = trial;
  t.scheme = r.scheme;
  t.failures = r.failures;

  double acc = 0.0;
  int count = 0;
  for (int m = 0; m < r.n_aaus; ++m) {
    for (int k = 0; k < r.n_ues; ++k) {
      if (r.failed_at(m, k)) continue;
      const double e = r.estimate_at(m, k) - r.truth_at(m, k);
      acc += e * e;
      ++count;
    }
  }
  t.mse = count > 0 ? acc / count : kNan;

  if (r.scheme == scheme_name(Scheme::kHfs)) {
    // NaN entries (the master slot, failed links) drop out of the means.
    t.stage1_mse = nan_mean(r.stage1_errors, true);
    t.stage2_mse = nan_mean(r.stage2_errors, true);
  } else {
    t.stage1_mse = kNan;
    t.stage2_mse = kNan;
  }
  return t;
}

std::vector<TrialResult> run_experiment(const SystemConfig& cfg, const std::vector<Scheme>& schemes,
                                        int jobs, const PointEstimator& estimator) {
  if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
  const int n_schemes = static_cast<int>(schemes.size());
  std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials) * n_schemes);

  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, cfg.trials);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= cfg.trials) return;
      const std::uint64_t seed = rng::trial_seed(cfg.master_seed, static_cast<std::uint64_t>(t));
      const Topology topo = generate_topology(cfg, seed);
      for (int s = 0; s < n_schemes; ++s) {
        const SchemeResult r = schemes[s] == Scheme::kHfs
                                   ? run_hfs(cfg, topo, seed, estimator)
                                   : run_baseline(cfg, topo, seed, estimator);
        results[static_cast<std::size_t>(t) * n_schemes + s] = summarize_trial(r, t);
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

CdfTable make_cdf(std::vector<double> mse_values) {
  if (mse_values.empty()) throw std::invalid_argument("make_cdf: empty input");
  std::sort(mse_values.begin(), mse_values.end());
  CdfTable cdf;
  cdf.values = std::move(mse_values);
  const std::size_t t = cdf.values.size();
  cdf.probs.reserve(t);
  for (std::size_t i = 0; i < t; ++i) cdf.probs.push_back(static_cast<double>(i + 1) / t);
  return cdf;
}

std::vector<double> scheme_mse_series(const std::vector<TrialResult>& results,
                                      const std::string& scheme) {
  std::vector<double> out;
  for (const auto& r : results) {
    if (r.scheme == scheme) out.push_back(r.mse);
  }
  return out;
}

SpeedSweep theory_vs_sim(const SystemConfig& cfg, const std::vector<double>& speeds, int jobs,
                         const PointEstimator& estimator) {
  if (speeds.empty()) throw std::invalid_argument("theory_vs_sim: speeds must be nonempty");
  SpeedSweep sweep;
  for (const double v : speeds) {
    SystemConfig run_cfg = cfg;
    run_cfg.ue_speed_mps = v;
    auto results = run_experiment(run_cfg, {Scheme::kHfs}, jobs, estimator);

    std::vector<double> mses, s1, s2;
    for (const auto& r : results) {
      if (!std::isnan(r.mse)) mses.push_back(r.mse);
      if (!std::isnan(r.stage1_mse)) s1.push_back(r.stage1_mse);
      if (!std::isnan(r.stage2_mse)) s2.push_back(r.stage2_mse);
    }
    SpeedPoint p;
    p.speed_mps = v;
    p.empirical_mse = mean_of(mses);
    p.sigma1_sq = s1.empty() ? 0.0 : mean_of(s1);
    p.sigma2_sq = s2.empty() ? 0.0 : mean_of(s2);
    p.theory_mse = mse_simplified(TheoryInputs::from_config(run_cfg, p.sigma1_sq, p.sigma2_sq));
    p.abs_error = std::abs(p.theory_mse - p.empirical_mse);
    sweep.points.push_back(p);
    sweep.per_speed.push_back(std::move(results));
  }
  return sweep;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double acc = 0.0;
  for (const double x : v) acc += x;
  return acc / v.size();
}

double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace hfsim
