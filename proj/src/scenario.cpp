#include "hfsim/scenario.hpp"

#include <limits>
#include <stdexcept>

#include "hfsim/rng.hpp"

namespace hfsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Vec2 draw_disk_point(rng::Stream& s, double radius) {
  // sqrt law makes the density uniform over the disk area
  const double r = radius * std::sqrt(s.uniform01());
  const double a = s.uniform(0.0, kTwoPi);
  return {r * std::cos(a), r * std::sin(a)};
}

int nearest_index(const std::vector<Vec2>& pts, const Vec2& target) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double d = distance(pts[i], target);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

Topology generate_topology(const SystemConfig& cfg, std::uint64_t trial_seed) {
  Topology topo;
  const int m = cfg.n_aaus;
  const int k = cfg.n_ues;

  auto pos_stream = rng::make_stream(trial_seed, "topo_pos");
  topo.aau_pos.reserve(m);
  for (int i = 0; i < m; ++i) topo.aau_pos.push_back(draw_disk_point(pos_stream, cfg.cell_radius_m));
  topo.ue_pos.reserve(k);
  for (int i = 0; i < k; ++i) topo.ue_pos.push_back(draw_disk_point(pos_stream, cfg.cell_radius_m));

  auto bias_stream = rng::make_stream(trial_seed, "topo_bias");
  topo.aau_bias.reserve(m);
  for (int i = 0; i < m; ++i) topo.aau_bias.push_back(bias_stream.uniform(-0.25, 0.25));
  topo.ue_bias.reserve(k);
  for (int i = 0; i < k; ++i) topo.ue_bias.push_back(bias_stream.uniform(-0.25, 0.25));

  // Velocity direction is always drawn so position/bias draws are identical
  // across speed sweeps sharing a seed.
  auto vel_stream = rng::make_stream(trial_seed, "topo_vel");
  topo.ue_velocity.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double a = vel_stream.uniform(0.0, kTwoPi);
    topo.ue_velocity.push_back({cfg.ue_speed_mps * std::cos(a), cfg.ue_speed_mps * std::sin(a)});
  }

  Vec2 centroid{0.0, 0.0};
  for (const auto& p : topo.aau_pos) {
    centroid.x += p.x / m;
    centroid.y += p.y / m;
  }
  topo.master = nearest_index(topo.aau_pos, centroid);

  topo.secondary.reserve(k);
  for (int i = 0; i < k; ++i) topo.secondary.push_back(nearest_index(topo.aau_pos, topo.ue_pos[i]));

  return topo;
}

double true_cfo(const Topology& topo, const SystemConfig& cfg, DeviceId tx, DeviceId rx) {
  if (tx == rx) throw std::invalid_argument("true_cfo: tx and rx must differ");

  double phi = topo.bias(tx) - topo.bias(rx);

  if (tx.is_ue() != rx.is_ue()) {
    const DeviceId ue = tx.is_ue() ? tx : rx;
    const DeviceId other = tx.is_ue() ? rx : tx;
    const Vec2& up = topo.position(ue);
    const Vec2& op = topo.position(other);
    const double d = distance(up, op);
    if (d > 1e-12) {
      const Vec2 u{(op.x - up.x) / d, (op.y - up.y) / d};
      const Vec2& v = topo.ue_velocity[ue.index];
      const double radial = v.x * u.x + v.y * u.y;  // closing speed, m/s
      double doppler = cfg.carrier_freq_hz * radial / (kSpeedOfLight * cfg.subcarrier_spacing_hz);
      // Sign convention: the Doppler term is stated for the uplink
      // direction (UE transmits); flipping the endpoints flips the sign so
      // the antisymmetry contract holds.
      if (rx.is_ue()) doppler = -doppler;
      phi += doppler;
    }
  }
  return phi;
}

}  // namespace hfsim
