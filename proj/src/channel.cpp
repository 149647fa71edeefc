#include "hfsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hfsim {

double LinkChannel::gain_linear() const { return std::pow(10.0, pathloss_db / 10.0); }

double pathloss_db(const SystemConfig& cfg, double d_m, double shadow_db) {
  if (d_m <= 0.0) throw std::invalid_argument("pathloss_db: distance must be positive");
  return cfg.ref_gain_db - 10.0 * cfg.pathloss_exponent * std::log10(d_m / 1000.0) + shadow_db;
}

LinkChannel draw_link(const SystemConfig& cfg, const Topology& topo, DeviceId tx, DeviceId rx,
                      rng::Stream& stream) {
  LinkChannel link;
  link.tx = tx;
  link.rx = rx;

  const double d = std::max(1.0, distance(topo.position(tx), topo.position(rx)));
  const bool aau_to_aau = !tx.is_ue() && !rx.is_ue();
  double shadow = 0.0;
  if (cfg.shadow_var_db > 0.0 && (!aau_to_aau || cfg.aau_shadowing)) {
    shadow = std::sqrt(cfg.shadow_var_db) * stream.normal();
  }
  link.pathloss_db = pathloss_db(cfg, d, shadow);

  const double tap_var = link.gain_linear() / cfg.n_taps;
  link.taps.reserve(cfg.n_taps);
  for (int l = 0; l < cfg.n_taps; ++l) link.taps.push_back(stream.cnormal(tap_var));
  return link;
}

LinkChannel draw_link_normalized(const SystemConfig& cfg, DeviceId tx, DeviceId rx,
                                 rng::Stream& stream) {
  LinkChannel link;
  link.tx = tx;
  link.rx = rx;
  link.pathloss_db = -10.0 * std::log10(static_cast<double>(cfg.n_aaus));
  const double tap_var = 1.0 / (static_cast<double>(cfg.n_aaus) * cfg.n_taps);
  link.taps.reserve(cfg.n_taps);
  for (int l = 0; l < cfg.n_taps; ++l) link.taps.push_back(stream.cnormal(tap_var));
  return link;
}

double link_snr_db(const SystemConfig& cfg, const LinkChannel& link, double tx_power_w) {
  return 10.0 * std::log10(tx_power_w * 1000.0) + link.pathloss_db - cfg.noise_power_dbm;
}

}  // namespace hfsim
