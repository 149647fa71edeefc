#ifndef HFSIM_SCENARIO_HPP
#define HFSIM_SCENARIO_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "hfsim/config.hpp"

namespace hfsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// A device endpoint: one of the AAUs or one of the UEs.
struct DeviceId {
  enum class Kind { kAau, kUe };
  Kind kind = Kind::kAau;
  int index = 0;

  static DeviceId aau(int i) { return {Kind::kAau, i}; }
  static DeviceId ue(int k) { return {Kind::kUe, k}; }
  bool is_ue() const { return kind == Kind::kUe; }
  bool operator==(const DeviceId&) const = default;
};

/// Placement, role assignment and ground-truth oscillator state for one trial.
struct Topology {
  std::vector<Vec2> aau_pos;      // M entries
  std::vector<Vec2> ue_pos;       // K entries
  int master = 0;                 // AAU closest to the AAU centroid
  std::vector<int> secondary;     // per UE: AAU closest to that UE
  std::vector<double> aau_bias;   // normalized oscillator bias per AAU
  std::vector<double> ue_bias;    // normalized oscillator bias per UE
  std::vector<Vec2> ue_velocity;  // m/s

  const Vec2& position(DeviceId d) const {
    return d.is_ue() ? ue_pos[d.index] : aau_pos[d.index];
  }
  double bias(DeviceId d) const {
    return d.is_ue() ? ue_bias[d.index] : aau_bias[d.index];
  }
};

/// Draws AAU/UE placement uniformly over the disk of radius cell_radius_m,
/// per-device oscillator biases uniform in (-0.25, 0.25), and UE velocity
/// directions uniform in (0, 2*pi) at the configured speed. Master and
/// secondary roles follow from the geometry. Deterministic in trial_seed.
Topology generate_topology(const SystemConfig& cfg, std::uint64_t trial_seed);

/// Ground-truth normalized CFO of the link tx -> rx: oscillator bias
/// difference plus the normalized Doppler offset when exactly one endpoint
/// is a UE. Antisymmetric in (tx, rx); throws on tx == rx.
double true_cfo(const Topology& topo, const SystemConfig& cfg, DeviceId tx, DeviceId rx);

}  // namespace hfsim

#endif  // HFSIM_SCENARIO_HPP
