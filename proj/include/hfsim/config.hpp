#ifndef HFSIM_CONFIG_HPP
#define HFSIM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hfsim {

/// All physical, waveform, estimator and experiment parameters.
///
/// Defaults describe the reference scenario: a 1 km cell, 64 AAUs, one UE,
/// 32-subcarrier OFDMA bursts of 2 symbols with 20 data carriers, QPSK,
/// 8-tap Rayleigh channels with log-distance path loss and shadow fading.
struct SystemConfig {
  int n_subcarriers = 32;          // N
  int n_data = 20;                 // P_k, identical for all UEs
  int cp_len = 8;                  // N_c, samples
  int n_symbols = 2;               // L_b, OFDM symbols per estimation burst
  int n_taps = 8;                  // L
  double bandwidth_hz = 20e6;
  double subcarrier_spacing_hz = 15e3;  // delta f
  double carrier_freq_hz = 2e9;         // f
  int n_aaus = 64;                 // M
  int n_ues = 1;                   // K
  double cell_radius_m = 1000.0;   // R
  double ue_power_w = 0.1;
  double aau_power_w = 0.5;
  double noise_power_dbm = -121.4;
  double pathloss_exponent = 3.76;  // lambda
  double ref_gain_db = -148.1;      // zeta, at 1 km
  double shadow_var_db = 8.0;       // variance of the dB-domain shadow term
  bool aau_shadowing = true;        // apply shadow fading on AAU-AAU links
  double ue_speed_mps = 0.0;        // identical for all UEs
  int trials = 50;
  std::uint64_t master_seed = 0x5eed0cf0ULL;
  int grid_points = 140;            // rho, CFO search grid size
  bool refine = true;               // quadratic interpolation around the grid minimum

  /// Number of null subcarriers Q = N - P_k.
  int n_nulls() const { return n_subcarriers - n_data; }

  /// Noise power per complex sample, watts.
  double noise_power_w() const;

  /// Normalized Doppler scale f*v/(c*df) at the configured UE speed.
  double doppler_scale() const;

  /// Field-level validation; returns a list of "field: problem" messages,
  /// empty when the configuration is usable.
  std::vector<std::string> validate() const;
};

/// Speed of light, m/s.
inline constexpr double kSpeedOfLight = 299792458.0;

/// Parse a flat key = value config file. Unknown keys and malformed values
/// are reported as errors; '#' starts a comment. Missing keys keep defaults.
SystemConfig load_config_file(const std::string& path, std::vector<std::string>& errors);

/// Apply a single "key=value" override to an existing config. Returns an
/// error message, or an empty string on success.
std::string apply_override(SystemConfig& cfg, const std::string& key, const std::string& value);

/// Full snapshot of every field as key -> printable value, defaults included.
std::map<std::string, std::string> config_snapshot(const SystemConfig& cfg);

}  // namespace hfsim

#endif  // HFSIM_CONFIG_HPP
