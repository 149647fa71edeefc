#include "hfsim/schemes.hpp"

#include <cmath>
#include <limits>

namespace hfsim {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

PointEstimator music_estimator() {
  return [](const LinkObservation&, const OfdmBurst& rx, const SubcarrierMap& map,
            const SystemConfig& cfg) {
    const CfoEstimate e = estimate_cfo(rx, map, cfg);
    return EstimateOutcome{e.value, e.failed};
  };
}

PointEstimator oracle_estimator() {
  return [](const LinkObservation& obs, const OfdmBurst&, const SubcarrierMap&,
            const SystemConfig&) { return EstimateOutcome{obs.observed_cfo, false}; };
}

PointEstimator offset_oracle_estimator(std::function<double(const LinkObservation&)> error_of) {
  return [error_of = std::move(error_of)](const LinkObservation& obs, const OfdmBurst&,
                                          const SubcarrierMap&, const SystemConfig&) {
    return EstimateOutcome{obs.observed_cfo + error_of(obs), false};
  };
}

TrialChannels draw_trial_channels(const SystemConfig& cfg, const Topology& topo,
                                  std::uint64_t trial_seed) {
  TrialChannels ch;
  ch.ue_links.resize(static_cast<std::size_t>(cfg.n_aaus) * cfg.n_ues);
  for (int m = 0; m < cfg.n_aaus; ++m) {
    for (int k = 0; k < cfg.n_ues; ++k) {
      auto s = rng::make_stream(trial_seed, "chan_ue", static_cast<std::uint64_t>(m),
                                static_cast<std::uint64_t>(k));
      ch.ue_links[static_cast<std::size_t>(m) * cfg.n_ues + k] =
          draw_link(cfg, topo, DeviceId::ue(k), DeviceId::aau(m), s);
    }
  }
  ch.aau_links.resize(cfg.n_aaus);
  for (int m = 0; m < cfg.n_aaus; ++m) {
    if (m == topo.master) continue;
    auto s = rng::make_stream(trial_seed, "chan_aau", static_cast<std::uint64_t>(m));
    ch.aau_links[m] = draw_link(cfg, topo, DeviceId::aau(topo.master), DeviceId::aau(m), s);
  }
  return ch;
}

namespace {

SchemeResult make_result(const SystemConfig& cfg, const char* name) {
  SchemeResult r;
  r.scheme = name;
  r.n_aaus = cfg.n_aaus;
  r.n_ues = cfg.n_ues;
  const std::size_t links = static_cast<std::size_t>(cfg.n_aaus) * cfg.n_ues;
  r.estimates.assign(links, 0.0);
  r.truths.assign(links, 0.0);
  r.failed.assign(links, 0);
  r.stage1_errors.assign(cfg.n_aaus, kNan);
  r.stage2_errors.assign(cfg.n_ues, kNan);
  return r;
}

void fill_truths(const SystemConfig& cfg, const Topology& topo, SchemeResult& r) {
  for (int m = 0; m < cfg.n_aaus; ++m) {
    for (int k = 0; k < cfg.n_ues; ++k) {
      r.truths[static_cast<std::size_t>(m) * cfg.n_ues + k] =
          true_cfo(topo, cfg, DeviceId::ue(k), DeviceId::aau(m));
    }
  }
}

}  // namespace

SchemeResult run_hfs(const SystemConfig& cfg, const Topology& topo, std::uint64_t trial_seed,
                     const PointEstimator& estimator) {
  SchemeResult r = make_result(cfg, scheme_name(Scheme::kHfs));
  fill_truths(cfg, topo, r);

  const TrialChannels channels = draw_trial_channels(cfg, topo, trial_seed);
  const SubcarrierMap map = make_map(cfg);

  // Stage 1: master broadcast, each slave estimates its offset to the master.
  auto aau_payload = rng::make_stream(trial_seed, "payload_aau");
  const OfdmBurst aau_burst = modulate(cfg, map, aau_payload);

  // stage1_errors stays NaN for the master (it is the reference, not an
  // estimate) and for failed slaves.
  std::vector<double> stage1_est(cfg.n_aaus, 0.0);
  std::vector<std::uint8_t> stage1_failed(cfg.n_aaus, 0);
  for (int m = 0; m < cfg.n_aaus; ++m) {
    if (m == topo.master) continue;
    const double phi = true_cfo(topo, cfg, DeviceId::aau(topo.master), DeviceId::aau(m));
    auto noise = rng::make_stream(trial_seed, "noise_aau", static_cast<std::uint64_t>(m));
    const OfdmBurst rx =
        apply_link(aau_burst, channels.aau_links[m], phi, 0, cfg, cfg.aau_power_w, &noise);
    const LinkObservation obs{DeviceId::aau(topo.master), DeviceId::aau(m), phi, cfg.aau_power_w};
    const EstimateOutcome out = estimator(obs, rx, map, cfg);
    if (out.failed) {
      stage1_failed[m] = 1;
      continue;
    }
    stage1_est[m] = out.value;
    r.stage1_errors[m] = out.value - phi;
  }

  // Stage 2: each UE against its secondary AAU, which now runs at its
  // compensated frequency (bias retuned by the stage-1 estimate).
  std::vector<double> stage2_est(cfg.n_ues, 0.0);
  std::vector<std::uint8_t> stage2_failed(cfg.n_ues, 0);
  for (int k = 0; k < cfg.n_ues; ++k) {
    const int sec = topo.secondary[k];
    const double phi_observed =
        true_cfo(topo, cfg, DeviceId::ue(k), DeviceId::aau(sec)) - stage1_est[sec];
    auto payload = rng::make_stream(trial_seed, "payload_ue", static_cast<std::uint64_t>(k));
    const OfdmBurst ue_burst = modulate(cfg, map, payload);
    auto noise = rng::make_stream(trial_seed, "noise_ue", static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(sec));
    const OfdmBurst rx =
        apply_link(ue_burst, channels.ue_links[static_cast<std::size_t>(sec) * cfg.n_ues + k],
                   phi_observed, 0, cfg, cfg.ue_power_w, &noise);
    const LinkObservation obs{DeviceId::ue(k), DeviceId::aau(sec), phi_observed, cfg.ue_power_w};
    const EstimateOutcome out = estimator(obs, rx, map, cfg);
    if (out.failed) {
      stage2_failed[k] = 1;
      continue;
    }
    stage2_est[k] = out.value;
    r.stage2_errors[k] = out.value - phi_observed;
  }

  // Reconstruction: stage-1 estimate of the receiving AAU plus the stage-2
  // estimate of the UE at its secondary.
  for (int m = 0; m < cfg.n_aaus; ++m) {
    for (int k = 0; k < cfg.n_ues; ++k) {
      const std::size_t idx = static_cast<std::size_t>(m) * cfg.n_ues + k;
      if (stage1_failed[m] || stage1_failed[topo.secondary[k]] || stage2_failed[k]) {
        r.failed[idx] = 1;
        ++r.failures;
        continue;
      }
      r.estimates[idx] = stage1_est[m] + stage2_est[k];
    }
  }
  return r;
}

SchemeResult run_baseline(const SystemConfig& cfg, const Topology& topo, std::uint64_t trial_seed,
                          const PointEstimator& estimator) {
  SchemeResult r = make_result(cfg, scheme_name(Scheme::kBaseline));
  fill_truths(cfg, topo, r);

  const TrialChannels channels = draw_trial_channels(cfg, topo, trial_seed);
  const SubcarrierMap map = make_map(cfg);

  for (int k = 0; k < cfg.n_ues; ++k) {
    auto payload = rng::make_stream(trial_seed, "payload_ue", static_cast<std::uint64_t>(k));
    const OfdmBurst ue_burst = modulate(cfg, map, payload);
    for (int m = 0; m < cfg.n_aaus; ++m) {
      const std::size_t idx = static_cast<std::size_t>(m) * cfg.n_ues + k;
      const double phi = r.truths[idx];
      auto noise = rng::make_stream(trial_seed, "noise_ue", static_cast<std::uint64_t>(k),
                                    static_cast<std::uint64_t>(m));
      const OfdmBurst rx = apply_link(ue_burst, channels.ue_links[idx], phi, 0, cfg,
                                      cfg.ue_power_w, &noise);
      const LinkObservation obs{DeviceId::ue(k), DeviceId::aau(m), phi, cfg.ue_power_w};
      const EstimateOutcome out = estimator(obs, rx, map, cfg);
      if (out.failed) {
        r.failed[idx] = 1;
        ++r.failures;
        continue;
      }
      r.estimates[idx] = out.value;
    }
  }
  return r;
}

const char* scheme_name(Scheme s) { return s == Scheme::kHfs ? "hfs" : "baseline"; }

long count_estimations(Scheme scheme, int n_aaus, int n_ues) {
  if (scheme == Scheme::kHfs) return static_cast<long>(n_aaus - 1) + n_ues;
  return static_cast<long>(n_aaus) * n_ues;
}

}  // namespace hfsim
