#ifndef HFSIM_SCHEMES_HPP
#define HFSIM_SCHEMES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hfsim/channel.hpp"
#include "hfsim/config.hpp"
#include "hfsim/estimator.hpp"
#include "hfsim/ofdm.hpp"
#include "hfsim/scenario.hpp"

namespace hfsim {

/// What a point-to-point synchronization block is asked to estimate. The
/// observed CFO is the ground truth of that single link as seen by the
/// receiver (compensation included), which lets tests swap the estimator
/// for an exact or fault-injecting oracle.
struct LinkObservation {
  DeviceId tx;
  DeviceId rx;
  double observed_cfo = 0.0;
  double tx_power_w = 0.0;
};

struct EstimateOutcome {
  double value = 0.0;
  bool failed = false;
};

using PointEstimator = std::function<EstimateOutcome(
    const LinkObservation&, const OfdmBurst& rx, const SubcarrierMap&, const SystemConfig&)>;

/// The production estimator: the null-subcarrier grid search on the
/// received burst.
PointEstimator music_estimator();

/// Returns the observed CFO exactly; no waveform processing.
PointEstimator oracle_estimator();

/// Returns the observed CFO plus a caller-supplied error term; used to
/// exercise the error-decomposition structure of the reconstruction.
PointEstimator offset_oracle_estimator(std::function<double(const LinkObservation&)> error_of);

/// Per-trial channel realizations shared by every scheme: all UE -> AAU
/// links plus the master -> slave AAU links, each drawn from its own
/// purpose-keyed stream of trial_seed.
struct TrialChannels {
  std::vector<LinkChannel> ue_links;   // M x K, index m*K + k
  std::vector<LinkChannel> aau_links;  // M entries; slot of the master unused
};

TrialChannels draw_trial_channels(const SystemConfig& cfg, const Topology& topo,
                                  std::uint64_t trial_seed);

/// Per-scheme outcome for one trial: the M x K estimate and ground-truth
/// matrices plus the per-stage error records used by the theory comparison.
struct SchemeResult {
  std::string scheme;
  int n_aaus = 0;
  int n_ues = 0;
  std::vector<double> estimates;      // M x K, index m*K + k
  std::vector<double> truths;         // M x K
  std::vector<std::uint8_t> failed;   // M x K link failure mask
  std::vector<double> stage1_errors;  // per AAU; master entry 0, failed slaves NaN
  std::vector<double> stage2_errors;  // per UE; failed estimates NaN
  int failures = 0;

  double& at(std::vector<double>& v, int m, int k) { return v[static_cast<std::size_t>(m) * n_ues + k]; }
  double estimate_at(int m, int k) const { return estimates[static_cast<std::size_t>(m) * n_ues + k]; }
  double truth_at(int m, int k) const { return truths[static_cast<std::size_t>(m) * n_ues + k]; }
  bool failed_at(int m, int k) const { return failed[static_cast<std::size_t>(m) * n_ues + k] != 0; }
};

/// Two-stage hierarchical synchronization: the master AAU broadcast aligns
/// every slave, then each UE is estimated by its secondary AAU running at
/// the compensated frequency; per-link CFOs are reconstructed by composing
/// the two stage estimates. (M - 1) + K estimator invocations.
SchemeResult run_hfs(const SystemConfig& cfg, const Topology& topo, std::uint64_t trial_seed,
                     const PointEstimator& estimator);

/// Per-link benchmark: every AAU independently estimates every UE's CFO
/// from the UE uplink burst. M * K estimator invocations.
SchemeResult run_baseline(const SystemConfig& cfg, const Topology& topo, std::uint64_t trial_seed,
                          const PointEstimator& estimator);

enum class Scheme { kHfs, kBaseline };

const char* scheme_name(Scheme s);

/// Number of point-to-point estimator invocations a scheme needs.
long count_estimations(Scheme scheme, int n_aaus, int n_ues);

}  // namespace hfsim

#endif  // HFSIM_SCHEMES_HPP
