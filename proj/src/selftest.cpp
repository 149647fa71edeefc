#include "hfsim/selftest.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "hfsim/analysis.hpp"
#include "hfsim/channel.hpp"
#include "hfsim/estimator.hpp"
#include "hfsim/montecarlo.hpp"
#include "hfsim/ofdm.hpp"
#include "hfsim/rng.hpp"
#include "hfsim/scenario.hpp"
#include "hfsim/schemes.hpp"

namespace hfsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckResult check_parseval() {
  SystemConfig cfg;
  const SubcarrierMap map = make_map(cfg);
  auto payload = rng::make_stream(11, "selftest_parseval");
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const OfdmBurst b = modulate(cfg, map, payload);
    for (int g = 0; g < b.n_symbols; ++g) {
      double et = 0.0, ef = 0.0;
      for (int i = 0; i < b.n; ++i) et += std::norm(b.body(g)[i]);
      for (int i = 0; i < b.n; ++i) ef += std::norm(b.freq_row(g)[i]);
      worst = std::max(worst, std::abs(et / ef - 1.0));
    }
  }
  return {"dft-parseval", worst < 1e-12, "max |time/freq energy - 1| = " + fmt(worst)};
}

CheckResult check_rotation_algebra() {
  const int n = 32;
  auto s = rng::make_stream(12, "selftest_rotation");
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double p1 = s.uniform(-0.5, 0.5);
    const double p2 = s.uniform(-0.5, 0.5);
    for (int i = 0; i < n; ++i) {
      const std::complex<double> d1{std::cos(kTwoPi * p1 * i / n), std::sin(kTwoPi * p1 * i / n)};
      const std::complex<double> d2{std::cos(kTwoPi * p2 * i / n), std::sin(kTwoPi * p2 * i / n)};
      const std::complex<double> d12{std::cos(kTwoPi * (p1 + p2) * i / n),
                                     std::sin(kTwoPi * (p1 + p2) * i / n)};
      worst = std::max(worst, std::abs(d1 * d2 - d12));
      worst = std::max(worst, std::abs(std::abs(d1) - 1.0));
    }
  }
  return {"dft-rotation-algebra", worst < 1e-12, "max deviation = " + fmt(worst)};
}

CheckResult check_stacked_identity() {
  auto s = rng::make_stream(13, "selftest_stacked");
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    SystemConfig cfg;
    cfg.n_subcarriers = 8 + 4 * static_cast<int>(s.bits() % 3);  // 8, 12, 16
    cfg.n_data = cfg.n_subcarriers / 2;
    cfg.n_taps = 1 + static_cast<int>(s.bits() % 3);
    cfg.cp_len = 4;
    cfg.n_symbols = 2;
    cfg.n_ues = 1 + static_cast<int>(s.bits() % 2);
    cfg.n_aaus = 1 + static_cast<int>(s.bits() % 4);
    cfg.shadow_var_db = 0.0;
    const SubcarrierMap map = make_map(cfg);
    const Topology topo = generate_topology(cfg, 1000 + rep);

    std::vector<OfdmBurst> bursts;
    auto payload = rng::make_stream(14, "selftest_stacked_payload", rep);
    for (int k = 0; k < cfg.n_ues; ++k) bursts.push_back(modulate(cfg, map, payload));

    std::vector<LinkChannel> channels;
    std::vector<double> phis;
    auto chs = rng::make_stream(15, "selftest_stacked_chan", rep);
    for (int m = 0; m < cfg.n_aaus; ++m) {
      for (int k = 0; k < cfg.n_ues; ++k) {
        channels.push_back(draw_link_normalized(cfg, DeviceId::ue(k), DeviceId::aau(m), chs));
        phis.push_back(s.uniform(-0.5, 0.5));
      }
    }
    const double tx_power = static_cast<double>(cfg.n_data) / cfg.n_subcarriers;
    const auto stacked = stacked_receive(cfg, channels, phis, bursts, tx_power);

    for (int m = 0; m < cfg.n_aaus; ++m) {
      for (int g = 0; g < cfg.n_symbols; ++g) {
        std::vector<cplx> conv(cfg.n_subcarriers, cplx{0.0, 0.0});
        for (int k = 0; k < cfg.n_ues; ++k) {
          const std::size_t idx = static_cast<std::size_t>(m) * cfg.n_ues + k;
          const OfdmBurst rx =
              apply_link(bursts[k], channels[idx], phis[idx], 0, cfg, tx_power, nullptr);
          for (int i = 0; i < cfg.n_subcarriers; ++i) conv[i] += rx.body(g)[i];
        }
        for (int i = 0; i < cfg.n_subcarriers; ++i) {
          worst = std::max(worst,
                           std::abs(conv[i] - stacked[g][static_cast<std::size_t>(m) * cfg.n_subcarriers + i]));
        }
      }
    }
  }
  return {"stacked-identity", worst < 1e-9, "max |matrix - convolution| = " + fmt(worst)};
}

CheckResult check_loopback() {
  SystemConfig cfg;
  const SubcarrierMap map = make_map(cfg);
  auto payload = rng::make_stream(16, "selftest_loopback_payload");
  auto chs = rng::make_stream(17, "selftest_loopback_chan");
  const Dft dft(cfg.n_subcarriers);

  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const OfdmBurst tx = modulate(cfg, map, payload);
    const LinkChannel link = draw_link_normalized(cfg, DeviceId::ue(0), DeviceId::aau(0), chs);
    const double phi = -0.5 + (rep + 0.5) / 10.0;
    const double amp = std::sqrt(1.0 * cfg.n_subcarriers / cfg.n_data);
    const OfdmBurst rx = apply_link(tx, link, phi, 0, cfg, 1.0, nullptr);

    // per-carrier response of the taps
    std::vector<cplx> h(cfg.n_subcarriers);
    for (int q = 0; q < cfg.n_subcarriers; ++q) {
      cplx acc = 0.0;
      for (std::size_t l = 0; l < link.taps.size(); ++l) {
        const double a = -kTwoPi * static_cast<double>(q) * l / cfg.n_subcarriers;
        acc += link.taps[l] * cplx{std::cos(a), std::sin(a)};
      }
      h[q] = acc;
    }

    std::vector<cplx> derot(cfg.n_subcarriers), bins(cfg.n_subcarriers);
    for (int g = 0; g < cfg.n_symbols; ++g) {
      const double eta = kTwoPi * phi * static_cast<double>(g) * rx.sym_len() / rx.n;
      for (int i = 0; i < rx.n; ++i) {
        const double a = -(eta + kTwoPi * phi * i / rx.n);
        derot[i] = rx.body(g)[i] * cplx{std::cos(a), std::sin(a)};
      }
      dft.forward(derot.data(), bins.data());
      for (const int p : map.data_indices) {
        worst = std::max(worst, std::abs(bins[p] - amp * tx.freq_row(g)[p] * h[p]));
      }
      for (const int q : map.null_indices) worst = std::max(worst, std::abs(bins[q]));
    }
  }
  return {"loopback-recovery", worst < 1e-10, "max recovery error = " + fmt(worst)};
}

CheckResult check_oracle_reconstruction(bool flip_stage1_sign) {
  SystemConfig cfg;
  cfg.n_aaus = 8;
  cfg.n_ues = 2;
  double worst_static = 0.0;
  double worst_moving = 0.0;

  PointEstimator oracle = oracle_estimator();
  if (flip_stage1_sign) {
    oracle = [](const LinkObservation& obs, const OfdmBurst&, const SubcarrierMap&,
                const SystemConfig&) {
      const bool stage1 = !obs.tx.is_ue() && !obs.rx.is_ue();
      return EstimateOutcome{stage1 ? -obs.observed_cfo : obs.observed_cfo, false};
    };
  }

  for (int rep = 0; rep < 25; ++rep) {
    cfg.ue_speed_mps = 0.0;
    Topology topo = generate_topology(cfg, 9000 + rep);
    SchemeResult r = run_hfs(cfg, topo, 9000 + rep, oracle);
    for (int m = 0; m < cfg.n_aaus; ++m) {
      for (int k = 0; k < cfg.n_ues; ++k) {
        worst_static = std::max(worst_static, std::abs(r.estimate_at(m, k) - r.truth_at(m, k)));
      }
    }

    cfg.ue_speed_mps = 50.0;
    topo = generate_topology(cfg, 9000 + rep);
    r = run_hfs(cfg, topo, 9000 + rep, oracle);
    for (int m = 0; m < cfg.n_aaus; ++m) {
      for (int k = 0; k < cfg.n_ues; ++k) {
        const int sec = topo.secondary[k];
        const double d_sec = true_cfo(topo, cfg, DeviceId::ue(k), DeviceId::aau(sec)) -
                             (topo.ue_bias[k] - topo.aau_bias[sec]);
        const double d_m = true_cfo(topo, cfg, DeviceId::ue(k), DeviceId::aau(m)) -
                           (topo.ue_bias[k] - topo.aau_bias[m]);
        const double expected = d_sec - d_m;
        worst_moving = std::max(
            worst_moving, std::abs((r.estimate_at(m, k) - r.truth_at(m, k)) - expected));
      }
    }
  }
  const bool pass = worst_static < 1e-12 && worst_moving < 1e-12;
  return {"oracle-reconstruction", pass,
          "static residual = " + fmt(worst_static) + ", Doppler residual mismatch = " + fmt(worst_moving)};
}

CheckResult check_quadrature_vs_montecarlo() {
  TheoryInputs t;
  t.speed_mps = 100.0;
  const double quad = doppler_mse_integral(t);
  const double d = t.doppler_scale();

  auto s = rng::make_stream(18, "selftest_quad_mc");
  const int n = 1000000;
  double acc = 0.0, acc2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double psi = s.uniform(0.0, kTwoPi);
    const double r = s.uniform01();
    const double theta = s.uniform(0.0, kTwoPi);
    const double c = std::cos(kTwoPi - theta - psi);
    const double chord = r * std::cos(theta) +
                         std::sqrt(std::max(0.0, 1.0 - r * r * std::sin(theta) * std::sin(theta)));
    const double g = c * c * chord * chord;
    acc += g;
    acc2 += g * g;
  }
  const double mean = acc / n;
  const double var = std::max(0.0, acc2 / n - mean * mean);
  const double se = std::sqrt(var / n);
  const double mc = d * d * (0.5 + mean);
  const double diff = std::abs(quad - mc);
  const double bound = 3.0 * se * d * d;
  return {"quadrature-vs-montecarlo", diff <= bound,
          "quad = " + fmt(quad) + ", mc = " + fmt(mc) + ", |diff| = " + fmt(diff) +
              " (3se = " + fmt(bound) + ")"};
}

CheckResult check_map() {
  SystemConfig cfg;
  const SubcarrierMap map = make_map(cfg);
  bool ok = static_cast<int>(map.null_indices.size()) == cfg.n_nulls() &&
            static_cast<int>(map.data_indices.size()) == cfg.n_data;
  std::vector<char> seen(cfg.n_subcarriers, 0);
  for (const int q : map.null_indices) seen[q] += 1;
  for (const int p : map.data_indices) seen[p] += 1;
  for (const char c : seen) ok = ok && c == 1;
  for (std::size_t i = 1; i < map.data_indices.size(); ++i) {
    ok = ok && map.data_indices[i] > map.data_indices[i - 1];
  }
  return {"map-construction", ok,
          "Q = " + std::to_string(map.null_indices.size()) + ", P = " +
              std::to_string(map.data_indices.size())};
}

CheckResult check_noise_calibration() {
  SystemConfig cfg;
  auto noise = rng::make_stream(19, "selftest_noise");
  const double target = cfg.noise_power_w();
  const int n = 1000000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::norm(noise.cnormal(target));
  const double rel = std::abs(acc / n / target - 1.0);
  return {"noise-calibration", rel < 0.01, "relative power error = " + fmt(rel)};
}

CheckResult check_estimator_loopback() {
  SystemConfig cfg;
  cfg.shadow_var_db = 0.0;
  const SubcarrierMap map = make_map(cfg);
  const Topology topo = generate_topology(cfg, 4242);
  auto payload = rng::make_stream(20, "selftest_est_payload");
  auto chs = rng::make_stream(21, "selftest_est_chan");
  auto phis = rng::make_stream(22, "selftest_est_phi");

  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double phi = phis.uniform(-0.48, 0.48);
    const OfdmBurst tx = modulate(cfg, map, payload);
    const LinkChannel link = draw_link(cfg, topo, DeviceId::ue(0), DeviceId::aau(0), chs);
    const OfdmBurst rx = apply_link(tx, link, phi, 0, cfg, cfg.ue_power_w, nullptr);
    const CfoEstimate est = estimate_cfo(rx, map, cfg);
    worst = std::max(worst, std::abs(est.value - phi));
  }
  return {"estimator-loopback", worst < 1e-4, "max noise-free error = " + fmt(worst)};
}

CheckResult check_complexity_values() {
  ComplexityInputs c;  // M=64, K=1, N=32, Q=12, L_b=2, rho=140, eps=50
  const double hfs = complexity_hfs(c);
  const double music = complexity_music_baseline(c);
  const double pbee = complexity_pbee(c);
  const bool ok = hfs == 4193840.0 && music == 4229120.0 && pbee == 4386816.0;
  return {"complexity-values", ok,
          "hfs = " + fmt(hfs) + ", music = " + fmt(music) + ", pbee = " + fmt(pbee)};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelfTestOptions& opts) {
  std::vector<CheckResult> all;
  auto want = [&](const std::string& name) {
    return opts.filter.empty() || name.find(opts.filter) != std::string::npos;
  };

  if (want("map-construction")) all.push_back(check_map());
  if (want("dft-parseval")) all.push_back(check_parseval());
  if (want("dft-rotation-algebra")) all.push_back(check_rotation_algebra());
  if (want("stacked-identity")) all.push_back(check_stacked_identity());
  if (want("loopback-recovery")) all.push_back(check_loopback());
  if (want("noise-calibration")) all.push_back(check_noise_calibration());
  if (want("estimator-loopback")) all.push_back(check_estimator_loopback());
  if (want("oracle-reconstruction")) all.push_back(check_oracle_reconstruction(opts.flip_stage1_sign));
  if (want("quadrature-vs-montecarlo")) all.push_back(check_quadrature_vs_montecarlo());
  if (want("complexity-values")) all.push_back(check_complexity_values());
  return all;
}

}  // namespace hfsim
