#ifndef HFSIM_CHANNEL_HPP
#define HFSIM_CHANNEL_HPP

#include <complex>
#include <vector>

#include "hfsim/config.hpp"
#include "hfsim/rng.hpp"
#include "hfsim/scenario.hpp"

namespace hfsim {

/// One realization of a tx -> rx propagation channel: L Rayleigh taps whose
/// total expected power equals the linear large-scale gain.
struct LinkChannel {
  std::vector<std::complex<double>> taps;
  double pathloss_db = 0.0;  // beta, shadow fading included
  DeviceId tx;
  DeviceId rx;

  double gain_linear() const;
};

/// Log-distance path loss with the reference gain taken at 1 km:
/// zeta - 10*lambda*log10(d/1km) + shadow_db. Throws on d_m <= 0.
double pathloss_db(const SystemConfig& cfg, double d_m, double shadow_db);

/// Draws the shadow term and the L complex Gaussian taps for one link.
/// Distances below 1 m are clamped to 1 m.
LinkChannel draw_link(const SystemConfig& cfg, const Topology& topo, DeviceId tx, DeviceId rx,
                      rng::Stream& stream);

/// Unit-normalized channel mode: no path loss or shadowing, per-tap
/// variance 1/(M*L) so the expected gain summed over all M AAUs is one.
/// Used by the stacked-model identity tests, not by experiments.
LinkChannel draw_link_normalized(const SystemConfig& cfg, DeviceId tx, DeviceId rx,
                                 rng::Stream& stream);

/// Expected receive SNR of a link in dB, using the mean channel gain.
double link_snr_db(const SystemConfig& cfg, const LinkChannel& link, double tx_power_w);

}  // namespace hfsim

#endif  // HFSIM_CHANNEL_HPP
