#include "hfsim/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace hfsim {

double SystemConfig::noise_power_w() const {
  return std::pow(10.0, (noise_power_dbm - 30.0) / 10.0);
}

double SystemConfig::doppler_scale() const {
  return carrier_freq_hz * ue_speed_mps / (kSpeedOfLight * subcarrier_spacing_hz);
}

std::vector<std::string> SystemConfig::validate() const {
  std::vector<std::string> errs;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  require(n_subcarriers > 0, "n_subcarriers: must be positive");
  require(n_data > 0, "n_data: must be positive");
  require(n_data < n_subcarriers, "n_data: must be < n_subcarriers (at least one null subcarrier)");
  require(cp_len >= 0, "cp_len: must be nonnegative");
  require(n_symbols > 0, "n_symbols: must be positive");
  require(n_taps > 0, "n_taps: must be positive");
  require(cp_len >= n_taps - 1, "cp_len: must be >= n_taps - 1 to avoid inter-symbol interference");
  require(bandwidth_hz > 0, "bandwidth_hz: must be positive");
  require(subcarrier_spacing_hz > 0, "subcarrier_spacing_hz: must be positive");
  require(carrier_freq_hz > 0, "carrier_freq_hz: must be positive");
  require(n_aaus > 0, "n_aaus: must be positive");
  require(n_ues > 0, "n_ues: must be positive");
  require(cell_radius_m > 0, "cell_radius_m: must be positive");
  require(ue_power_w > 0, "ue_power_w: must be positive");
  require(aau_power_w > 0, "aau_power_w: must be positive");
  require(shadow_var_db >= 0, "shadow_var_db: must be nonnegative");
  require(ue_speed_mps >= 0, "ue_speed_mps: must be nonnegative");
  require(trials > 0, "trials: must be positive");
  require(grid_points > 2, "grid_points: must exceed 2 for a usable search grid");
  // Oscillator biases are drawn per device in (-0.25, 0.25), so pairwise
  // bias differences stay inside the (-0.5, 0.5) search span. The Doppler
  // excursion must leave that identifiable; reject speeds that do not.
  if (subcarrier_spacing_hz > 0 && carrier_freq_hz > 0) {
    require(doppler_scale() < 0.5,
            "ue_speed_mps: normalized Doppler f*v/(c*df) reaches 0.5; CFOs become ambiguous");
  }
  return errs;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, bool& out) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") {
    out = true;
    return true;
  }
  if (v == "false" || v == "0" || v == "off" || v == "no") {
    out = false;
    return true;
  }
  return false;
}

struct FieldBinding {
  std::function<std::string(SystemConfig&, const std::string&)> set;
  std::function<std::string(const SystemConfig&)> get;
};

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

const std::map<std::string, FieldBinding>& bindings() {
  auto int_field = [](int SystemConfig::* f) {
    return FieldBinding{
        [f](SystemConfig& c, const std::string& v) -> std::string {
          char* end = nullptr;
          const long x = std::strtol(v.c_str(), &end, 10);
          if (end == v.c_str() || *end != '\0') return "not an integer";
          c.*f = static_cast<int>(x);
          return "";
        },
        [f](const SystemConfig& c) { return std::to_string(c.*f); }};
  };
  auto dbl_field = [](double SystemConfig::* f) {
    return FieldBinding{
        [f](SystemConfig& c, const std::string& v) -> std::string {
          char* end = nullptr;
          const double x = std::strtod(v.c_str(), &end);
          if (end == v.c_str() || *end != '\0') return "not a number";
          c.*f = x;
          return "";
        },
        [f](const SystemConfig& c) { return fmt_double(c.*f); }};
  };
  auto bool_field = [](bool SystemConfig::* f) {
    return FieldBinding{
        [f](SystemConfig& c, const std::string& v) -> std::string {
          bool b = false;
          if (!parse_bool(v, b)) return "not a boolean (true/false)";
          c.*f = b;
          return "";
        },
        [f](const SystemConfig& c) { return (c.*f) ? std::string("true") : std::string("false"); }};
  };

  static const std::map<std::string, FieldBinding> table = {
      {"n_subcarriers", int_field(&SystemConfig::n_subcarriers)},
      {"n_data", int_field(&SystemConfig::n_data)},
      {"cp_len", int_field(&SystemConfig::cp_len)},
      {"n_symbols", int_field(&SystemConfig::n_symbols)},
      {"n_taps", int_field(&SystemConfig::n_taps)},
      {"bandwidth_hz", dbl_field(&SystemConfig::bandwidth_hz)},
      {"subcarrier_spacing_hz", dbl_field(&SystemConfig::subcarrier_spacing_hz)},
      {"carrier_freq_hz", dbl_field(&SystemConfig::carrier_freq_hz)},
      {"n_aaus", int_field(&SystemConfig::n_aaus)},
      {"n_ues", int_field(&SystemConfig::n_ues)},
      {"cell_radius_m", dbl_field(&SystemConfig::cell_radius_m)},
      {"ue_power_w", dbl_field(&SystemConfig::ue_power_w)},
      {"aau_power_w", dbl_field(&SystemConfig::aau_power_w)},
      {"noise_power_dbm", dbl_field(&SystemConfig::noise_power_dbm)},
      {"pathloss_exponent", dbl_field(&SystemConfig::pathloss_exponent)},
      {"ref_gain_db", dbl_field(&SystemConfig::ref_gain_db)},
      {"shadow_var_db", dbl_field(&SystemConfig::shadow_var_db)},
      {"aau_shadowing", bool_field(&SystemConfig::aau_shadowing)},
      {"ue_speed_mps", dbl_field(&SystemConfig::ue_speed_mps)},
      {"trials", int_field(&SystemConfig::trials)},
      {"master_seed",
       FieldBinding{[](SystemConfig& c, const std::string& v) -> std::string {
                      char* end = nullptr;
                      const unsigned long long x = std::strtoull(v.c_str(), &end, 0);
                      if (end == v.c_str() || *end != '\0') return "not a 64-bit unsigned integer";
                      c.master_seed = x;
                      return "";
                    },
                    [](const SystemConfig& c) { return std::to_string(c.master_seed); }}},
      {"grid_points", int_field(&SystemConfig::grid_points)},
      {"refine", bool_field(&SystemConfig::refine)},
  };
  return table;
}

}  // namespace

SystemConfig load_config_file(const std::string& path, std::vector<std::string>& errors) {
  SystemConfig cfg;
  std::ifstream in(path);
  if (!in) {
    errors.push_back("config: cannot open '" + path + "'");
    return cfg;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      errors.push_back(path + ":" + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const std::string err = apply_override(cfg, key, value);
    if (!err.empty()) errors.push_back(path + ":" + std::to_string(lineno) + ": " + err);
  }
  return cfg;
}

std::string apply_override(SystemConfig& cfg, const std::string& key, const std::string& value) {
  const auto& table = bindings();
  const auto it = table.find(key);
  if (it == table.end()) return key + ": unknown configuration key";
  const std::string err = it->second.set(cfg, value);
  if (!err.empty()) return key + ": " + err;
  return "";
}

std::map<std::string, std::string> config_snapshot(const SystemConfig& cfg) {
  std::map<std::string, std::string> snap;
  for (const auto& [key, binding] : bindings()) snap[key] = binding.get(cfg);
  return snap;
}

}  // namespace hfsim
