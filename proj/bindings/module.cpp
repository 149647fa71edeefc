#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "hfsim/analysis.hpp"
#include "hfsim/channel.hpp"
#include "hfsim/config.hpp"
#include "hfsim/estimator.hpp"
#include "hfsim/montecarlo.hpp"
#include "hfsim/ofdm.hpp"
#include "hfsim/scenario.hpp"
#include "hfsim/schemes.hpp"

namespace py = pybind11;
using namespace hfsim;

namespace {

Scheme scheme_from_name(const std::string& name) {
  if (name == "hfs") return Scheme::kHfs;
  if (name == "baseline") return Scheme::kBaseline;
  throw std::invalid_argument("unknown scheme: " + name);
}

CfoEstimate estimate_from_array(const py::array_t<std::complex<double>>& samples,
                                const SystemConfig& cfg) {
  if (samples.ndim() != 2) throw std::invalid_argument("samples must be 2-D (symbols x samples)");
  const auto view = samples.unchecked<2>();
  OfdmBurst burst;
  burst.n = cfg.n_subcarriers;
  burst.cp = cfg.cp_len;
  burst.n_symbols = static_cast<int>(view.shape(0));
  if (view.shape(1) != burst.sym_len()) {
    throw std::invalid_argument("samples row length must be n_subcarriers + cp_len");
  }
  burst.time.resize(static_cast<std::size_t>(burst.n_symbols) * burst.sym_len());
  for (py::ssize_t g = 0; g < view.shape(0); ++g) {
    for (py::ssize_t i = 0; i < view.shape(1); ++i) {
      burst.time[static_cast<std::size_t>(g) * burst.sym_len() + i] = view(g, i);
    }
  }
  return estimate_cfo(burst, make_map(cfg), cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monte Carlo simulator for hierarchical CFO synchronization in distributed "
            "massive MIMO-OFDMA uplinks";

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_readwrite("n_subcarriers", &SystemConfig::n_subcarriers)
      .def_readwrite("n_data", &SystemConfig::n_data)
      .def_readwrite("cp_len", &SystemConfig::cp_len)
      .def_readwrite("n_symbols", &SystemConfig::n_symbols)
      .def_readwrite("n_taps", &SystemConfig::n_taps)
      .def_readwrite("bandwidth_hz", &SystemConfig::bandwidth_hz)
      .def_readwrite("subcarrier_spacing_hz", &SystemConfig::subcarrier_spacing_hz)
      .def_readwrite("carrier_freq_hz", &SystemConfig::carrier_freq_hz)
      .def_readwrite("n_aaus", &SystemConfig::n_aaus)
      .def_readwrite("n_ues", &SystemConfig::n_ues)
      .def_readwrite("cell_radius_m", &SystemConfig::cell_radius_m)
      .def_readwrite("ue_power_w", &SystemConfig::ue_power_w)
      .def_readwrite("aau_power_w", &SystemConfig::aau_power_w)
      .def_readwrite("noise_power_dbm", &SystemConfig::noise_power_dbm)
      .def_readwrite("pathloss_exponent", &SystemConfig::pathloss_exponent)
      .def_readwrite("ref_gain_db", &SystemConfig::ref_gain_db)
      .def_readwrite("shadow_var_db", &SystemConfig::shadow_var_db)
      .def_readwrite("aau_shadowing", &SystemConfig::aau_shadowing)
      .def_readwrite("ue_speed_mps", &SystemConfig::ue_speed_mps)
      .def_readwrite("trials", &SystemConfig::trials)
      .def_readwrite("master_seed", &SystemConfig::master_seed)
      .def_readwrite("grid_points", &SystemConfig::grid_points)
      .def_readwrite("refine", &SystemConfig::refine)
      .def("n_nulls", &SystemConfig::n_nulls)
      .def("validate", &SystemConfig::validate)
      .def("doppler_scale", &SystemConfig::doppler_scale);

  py::class_<Vec2>(m, "Vec2")
      .def_readonly("x", &Vec2::x)
      .def_readonly("y", &Vec2::y);

  py::class_<DeviceId>(m, "DeviceId")
      .def_static("aau", &DeviceId::aau, py::arg("index"))
      .def_static("ue", &DeviceId::ue, py::arg("index"))
      .def_readonly("index", &DeviceId::index)
      .def("is_ue", &DeviceId::is_ue);

  py::class_<Topology>(m, "Topology")
      .def_readonly("aau_pos", &Topology::aau_pos)
      .def_readonly("ue_pos", &Topology::ue_pos)
      .def_readonly("master", &Topology::master)
      .def_readonly("secondary", &Topology::secondary)
      .def_readonly("aau_bias", &Topology::aau_bias)
      .def_readonly("ue_bias", &Topology::ue_bias)
      .def_readonly("ue_velocity", &Topology::ue_velocity);

  py::class_<SubcarrierMap>(m, "SubcarrierMap")
      .def_readonly("data_indices", &SubcarrierMap::data_indices)
      .def_readonly("null_indices", &SubcarrierMap::null_indices);

  py::class_<CfoEstimate>(m, "CfoEstimate")
      .def_readonly("value", &CfoEstimate::value)
      .def_readonly("cost_at_min", &CfoEstimate::cost_at_min)
      .def_readonly("grid_points_used", &CfoEstimate::grid_points_used)
      .def_readonly("failed", &CfoEstimate::failed);

  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("trial", &TrialResult::trial)
      .def_readonly("scheme", &TrialResult::scheme)
      .def_readonly("mse", &TrialResult::mse)
      .def_readonly("stage1_mse", &TrialResult::stage1_mse)
      .def_readonly("stage2_mse", &TrialResult::stage2_mse)
      .def_readonly("failures", &TrialResult::failures);

  py::class_<CdfTable>(m, "CdfTable")
      .def_readonly("values", &CdfTable::values)
      .def_readonly("probs", &CdfTable::probs);

  py::class_<SpeedPoint>(m, "SpeedPoint")
      .def_readonly("speed_mps", &SpeedPoint::speed_mps)
      .def_readonly("empirical_mse", &SpeedPoint::empirical_mse)
      .def_readonly("theory_mse", &SpeedPoint::theory_mse)
      .def_readonly("abs_error", &SpeedPoint::abs_error)
      .def_readonly("sigma1_sq", &SpeedPoint::sigma1_sq)
      .def_readonly("sigma2_sq", &SpeedPoint::sigma2_sq);

  m.def("generate_topology", &generate_topology, py::arg("cfg"), py::arg("trial_seed"));
  m.def("true_cfo", &true_cfo, py::arg("topology"), py::arg("cfg"), py::arg("tx"), py::arg("rx"));
  m.def(
      "pathloss_db",
      [](const SystemConfig& cfg, double d_m, double shadow_db) {
        return pathloss_db(cfg, d_m, shadow_db);
      },
      py::arg("cfg"), py::arg("distance_m"), py::arg("shadow_db") = 0.0);
  m.def("make_map", &make_map, py::arg("cfg"));
  m.def("estimate_cfo", &estimate_from_array, py::arg("samples"), py::arg("cfg"),
        "Null-subcarrier CFO estimate from a (symbols x (N+cp)) complex sample matrix");

  m.def(
      "mse_simplified",
      [](double sigma1_sq, double sigma2_sq, double speed_mps, const SystemConfig& cfg,
         bool colocated) {
        TheoryInputs t = TheoryInputs::from_config(cfg, sigma1_sq, sigma2_sq);
        t.speed_mps = speed_mps;
        t.colocated = colocated;
        return mse_simplified(t);
      },
      py::arg("sigma1_sq"), py::arg("sigma2_sq"), py::arg("speed_mps"), py::arg("cfg"),
      py::arg("colocated") = false);
  m.def(
      "doppler_mse_integral",
      [](double speed_mps, const SystemConfig& cfg) {
        TheoryInputs t = TheoryInputs::from_config(cfg, 0.0, 0.0);
        t.speed_mps = speed_mps;
        return doppler_mse_integral(t);
      },
      py::arg("speed_mps"), py::arg("cfg"));

  m.def(
      "complexity_hfs",
      [](int m_, int k_, const SystemConfig& cfg, int epsilon) {
        ComplexityInputs c = ComplexityInputs::from_config(cfg, m_, k_);
        c.epsilon = epsilon;
        return complexity_hfs(c);
      },
      py::arg("n_aaus"), py::arg("n_ues"), py::arg("cfg") = SystemConfig{}, py::arg("epsilon") = 50);
  m.def(
      "complexity_music_baseline",
      [](int m_, int k_, const SystemConfig& cfg, int epsilon) {
        ComplexityInputs c = ComplexityInputs::from_config(cfg, m_, k_);
        c.epsilon = epsilon;
        return complexity_music_baseline(c);
      },
      py::arg("n_aaus"), py::arg("n_ues"), py::arg("cfg") = SystemConfig{}, py::arg("epsilon") = 50);
  m.def(
      "complexity_pbee",
      [](int m_, int k_, const SystemConfig& cfg, int epsilon) {
        ComplexityInputs c = ComplexityInputs::from_config(cfg, m_, k_);
        c.epsilon = epsilon;
        return complexity_pbee(c);
      },
      py::arg("n_aaus"), py::arg("n_ues"), py::arg("cfg") = SystemConfig{}, py::arg("epsilon") = 50);
  m.def(
      "count_estimations",
      [](const std::string& scheme, int m_, int k_) {
        return count_estimations(scheme_from_name(scheme), m_, k_);
      },
      py::arg("scheme"), py::arg("n_aaus"), py::arg("n_ues"));

  m.def(
      "run_experiment",
      [](const SystemConfig& cfg, const std::vector<std::string>& schemes, int jobs) {
        std::vector<Scheme> parsed;
        parsed.reserve(schemes.size());
        for (const auto& s : schemes) parsed.push_back(scheme_from_name(s));
        return run_experiment(cfg, parsed, jobs);
      },
      py::arg("cfg"), py::arg("schemes"), py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def("make_cdf", &make_cdf, py::arg("mse_values"));
  m.def(
      "theory_vs_sim",
      [](const SystemConfig& cfg, const std::vector<double>& speeds, int jobs) {
        return theory_vs_sim(cfg, speeds, jobs).points;
      },
      py::arg("cfg"), py::arg("speeds"), py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "0.1.0";
}
