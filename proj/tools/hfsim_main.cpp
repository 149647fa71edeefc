// Command-line front end: experiment and analysis subcommands with CSV
// outputs and a JSON run manifest.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfsim/analysis.hpp"
#include "hfsim/channel.hpp"
#include "hfsim/config.hpp"
#include "hfsim/montecarlo.hpp"
#include "hfsim/ofdm.hpp"
#include "hfsim/rng.hpp"
#include "hfsim/scenario.hpp"
#include "hfsim/schemes.hpp"
#include "hfsim/selftest.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool trials_set = false;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "configuration file (key = value lines)");
  cmd->add_option("--out", args.out_dir, "output directory (default: $HFSIM_OUT_DIR or .)");
  cmd->add_option("--seed", args.seed, "master seed override")->each([&](const std::string&) {
    args.seed_set = true;
  });
  cmd->add_option("--trials", args.trials, "trial count override")->each([&](const std::string&) {
    args.trials_set = true;
  });
  cmd->add_option("--jobs", args.jobs, "worker threads (default: all cores)");
  cmd->add_option("overrides", args.overrides, "config overrides as key=value");
}

// 0 = ok, 2 = config error
int resolve_config(const CommonArgs& args, hfsim::SystemConfig& cfg) {
  std::vector<std::string> errors;
  if (!args.config_path.empty()) {
    cfg = hfsim::load_config_file(args.config_path, errors);
  }
  for (const auto& ov : args.overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos) {
      errors.push_back(ov + ": expected key=value");
      continue;
    }
    const std::string err = hfsim::apply_override(cfg, ov.substr(0, eq), ov.substr(eq + 1));
    if (!err.empty()) errors.push_back(err);
  }
  if (args.seed_set) cfg.master_seed = args.seed;
  if (args.trials_set) cfg.trials = args.trials;
  for (const auto& e : cfg.validate()) errors.push_back(e);
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
    return 2;
  }
  return 0;
}

std::filesystem::path output_dir(const CommonArgs& args) {
  if (!args.out_dir.empty()) return args.out_dir;
  if (const char* env = std::getenv("HFSIM_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class ManifestWriter {
 public:
  ManifestWriter(std::string command, const hfsim::SystemConfig& cfg, std::filesystem::path dir)
      : command_(std::move(command)), cfg_(cfg), dir_(std::move(dir)),
        start_(std::chrono::steady_clock::now()) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::ofstream open_csv(const std::string& name) {
    outputs_.push_back(name);
    std::ofstream out(dir_ / name, std::ios::binary);  // '\n' endings everywhere
    if (!out) throw std::runtime_error("cannot open output file " + (dir_ / name).string());
    return out;
  }

  void finalize() {
    nlohmann::json j;
    j["tool"] = "hfsim";
    j["version"] = kToolVersion;
    j["command"] = command_;
    j["master_seed"] = cfg_.master_seed;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    j["duration_seconds"] =
        std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
    j["outputs"] = outputs_;
    nlohmann::json snap;
    for (const auto& [k, v] : hfsim::config_snapshot(cfg_)) snap[k] = v;
    j["config"] = snap;
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    out << j.dump(2) << "\n";
  }

 private:
  std::string command_;
  hfsim::SystemConfig cfg_;
  std::filesystem::path dir_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> outputs_;
};

int cmd_mse(const CommonArgs& args, const std::vector<int>& m_values,
            const std::vector<std::string>& scheme_names) {
  hfsim::SystemConfig cfg;
  if (const int rc = resolve_config(args, cfg); rc != 0) return rc;
  if (m_values.empty()) {
    std::cerr << "config error: --m-values: empty AAU sweep\n";
    return 2;
  }
  std::vector<hfsim::Scheme> schemes;
  for (const auto& name : scheme_names) {
    if (name == "hfs") {
      schemes.push_back(hfsim::Scheme::kHfs);
    } else if (name == "baseline") {
      schemes.push_back(hfsim::Scheme::kBaseline);
    } else {
      std::cerr << "config error: --scheme: unknown scheme '" << name << "'\n";
      return 2;
    }
  }

  ManifestWriter manifest("mse", cfg, output_dir(args));
  auto csv = manifest.open_csv("mse_cdf.csv");
  csv << "scheme,M,trial_rank,mse,cum_prob\n";
  for (const int m : m_values) {
    hfsim::SystemConfig run_cfg = cfg;
    run_cfg.n_aaus = m;
    const auto results = hfsim::run_experiment(run_cfg, schemes, args.jobs);
    for (const auto& scheme : schemes) {
      const auto series = hfsim::scheme_mse_series(results, hfsim::scheme_name(scheme));
      const auto cdf = hfsim::make_cdf(series);
      for (std::size_t i = 0; i < cdf.values.size(); ++i) {
        csv << hfsim::scheme_name(scheme) << ',' << m << ',' << (i + 1) << ','
            << num(cdf.values[i]) << ',' << num(cdf.probs[i]) << '\n';
      }
    }
  }
  csv.close();
  manifest.finalize();
  return 0;
}

int cmd_speed(const CommonArgs& args, const std::vector<double>& speeds) {
  hfsim::SystemConfig cfg;
  if (const int rc = resolve_config(args, cfg); rc != 0) return rc;
  if (speeds.empty()) {
    std::cerr << "config error: --speeds: empty speed list\n";
    return 2;
  }

  ManifestWriter manifest("speed", cfg, output_dir(args));
  const auto sweep = hfsim::theory_vs_sim(cfg, speeds, args.jobs);

  auto cdf_csv = manifest.open_csv("speed_cdf.csv");
  cdf_csv << "speed_mps,trial_rank,mse,cum_prob\n";
  for (std::size_t s = 0; s < speeds.size(); ++s) {
    const auto series =
        hfsim::scheme_mse_series(sweep.per_speed[s], hfsim::scheme_name(hfsim::Scheme::kHfs));
    const auto cdf = hfsim::make_cdf(series);
    for (std::size_t i = 0; i < cdf.values.size(); ++i) {
      cdf_csv << num(speeds[s]) << ',' << (i + 1) << ',' << num(cdf.values[i]) << ','
              << num(cdf.probs[i]) << '\n';
    }
  }
  cdf_csv.close();

  auto tv_csv = manifest.open_csv("theory_vs_sim.csv");
  tv_csv << "speed_mps,empirical_mse,theory_mse,abs_error,sigma1_sq,sigma2_sq\n";
  for (const auto& p : sweep.points) {
    tv_csv << num(p.speed_mps) << ',' << num(p.empirical_mse) << ',' << num(p.theory_mse) << ','
           << num(p.abs_error) << ',' << num(p.sigma1_sq) << ',' << num(p.sigma2_sq) << '\n';
  }
  tv_csv.close();
  manifest.finalize();
  return 0;
}

int cmd_complexity(const CommonArgs& args, const std::vector<int>& m_values,
                   const std::vector<int>& k_values, int epsilon) {
  hfsim::SystemConfig cfg;
  if (const int rc = resolve_config(args, cfg); rc != 0) return rc;
  if (m_values.empty() || k_values.empty()) {
    std::cerr << "config error: complexity grid is empty\n";
    return 2;
  }

  ManifestWriter manifest("complexity", cfg, output_dir(args));
  auto csv = manifest.open_csv("complexity.csv");
  csv << "M,K,hfs_ops,music_ops,pbee_ops\n";
  for (const int m : m_values) {
    for (const int k : k_values) {
      hfsim::ComplexityInputs c = hfsim::ComplexityInputs::from_config(cfg, m, k);
      c.epsilon = epsilon;
      csv << m << ',' << k << ',' << static_cast<long long>(hfsim::complexity_hfs(c)) << ','
          << static_cast<long long>(hfsim::complexity_music_baseline(c)) << ','
          << static_cast<long long>(hfsim::complexity_pbee(c)) << '\n';
    }
  }
  csv.close();
  manifest.finalize();
  return 0;
}

int cmd_selftest(const CommonArgs& args, const std::string& filter,
                 const std::string& dump_burst_path) {
  hfsim::SystemConfig cfg;
  if (const int rc = resolve_config(args, cfg); rc != 0) return rc;

  ManifestWriter manifest("selftest", cfg, output_dir(args));

  if (!dump_burst_path.empty()) {
    // Debug dump: one received burst over a unit-normalized channel.
    const auto map = hfsim::make_map(cfg);
    auto payload = hfsim::rng::make_stream(cfg.master_seed, "dump_payload");
    auto chan = hfsim::rng::make_stream(cfg.master_seed, "dump_channel");
    auto noise = hfsim::rng::make_stream(cfg.master_seed, "dump_noise");
    const auto tx = hfsim::modulate(cfg, map, payload);
    const auto link = hfsim::draw_link_normalized(cfg, hfsim::DeviceId::ue(0),
                                                  hfsim::DeviceId::aau(0), chan);
    const auto rx = hfsim::apply_link(tx, link, 0.2, 0, cfg, cfg.ue_power_w, &noise);
    std::ofstream out(dump_burst_path, std::ios::binary);
    out << "symbol,sample,re,im\n";
    for (int g = 0; g < rx.n_symbols; ++g) {
      for (int i = 0; i < rx.sym_len(); ++i) {
        out << g << ',' << i << ',' << num(rx.time_row(g)[i].real()) << ','
            << num(rx.time_row(g)[i].imag()) << '\n';
      }
    }
  }

  hfsim::SelfTestOptions opts;
  opts.filter = filter;
  const auto checks = hfsim::run_selftest(opts);
  bool all_pass = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    all_pass = all_pass && c.pass;
  }
  if (checks.empty()) {
    std::cout << "no checks match filter '" << filter << "'\n";
    all_pass = false;
  }
  manifest.finalize();
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulator and analysis toolkit for hierarchical CFO synchronization "
               "in distributed massive MIMO-OFDMA uplinks"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommonArgs mse_args, speed_args, cx_args, st_args;

  auto* mse = app.add_subcommand("mse", "MSE CDFs of the hierarchical and per-link schemes");
  add_common(mse, mse_args);
  std::vector<int> mse_m_values{16, 64};
  std::vector<std::string> mse_schemes{"hfs", "baseline"};
  mse->add_option("--m-values", mse_m_values, "AAU counts to sweep")->delimiter(',');
  mse->add_option("--scheme", mse_schemes, "schemes to run (hfs, baseline)")->delimiter(',');

  auto* speed = app.add_subcommand("speed", "UE speed sweep with theory-vs-simulation table");
  add_common(speed, speed_args);
  std::vector<double> speeds{0.0, 10.0, 50.0, 100.0};
  speed->add_option("--speeds", speeds, "UE speeds in m/s")->delimiter(',');

  auto* cx = app.add_subcommand("complexity", "operation counts of the three schemes over an (M, K) grid");
  add_common(cx, cx_args);
  std::vector<int> cx_m{8, 16, 32, 64};
  std::vector<int> cx_k{4, 8, 16};
  int epsilon = 50;
  cx->add_option("--m-values", cx_m, "AAU counts")->delimiter(',');
  cx->add_option("--k-values", cx_k, "UE counts")->delimiter(',');
  cx->add_option("--epsilon", epsilon, "search count of the pairing-based benchmark");

  auto* st = app.add_subcommand("selftest", "run the fast invariant suite");
  add_common(st, st_args);
  std::string filter;
  std::string dump_burst;
  st->add_option("--filter", filter, "run only checks whose name contains this substring");
  st->add_option("--dump-burst", dump_burst, "write one received burst as CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad usage is a configuration error
  }

  try {
    if (mse->parsed()) return cmd_mse(mse_args, mse_m_values, mse_schemes);
    if (speed->parsed()) return cmd_speed(speed_args, speeds);
    if (cx->parsed()) return cmd_complexity(cx_args, cx_m, cx_k, epsilon);
    if (st->parsed()) return cmd_selftest(st_args, filter, dump_burst);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
