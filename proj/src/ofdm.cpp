#include "hfsim/ofdm.hpp"

#include <cmath>
#include <stdexcept>

namespace hfsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

Dft::Dft(int n) : n_(n) {
  w_.reserve(n);
  for (int t = 0; t < n; ++t) {
    const double a = -kTwoPi * t / n;
    w_.emplace_back(std::cos(a), std::sin(a));
  }
}

void Dft::forward(const cplx* in, cplx* out) const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  for (int q = 0; q < n_; ++q) {
    cplx acc = 0.0;
    for (int t = 0; t < n_; ++t) acc += in[t] * w_[(static_cast<long>(q) * t) % n_];
    out[q] = acc * scale;
  }
}

void Dft::inverse(const cplx* in, cplx* out) const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  for (int t = 0; t < n_; ++t) {
    cplx acc = 0.0;
    for (int q = 0; q < n_; ++q) acc += in[q] * std::conj(w_[(static_cast<long>(q) * t) % n_]);
    out[t] = acc * scale;
  }
}

cplx Dft::bin(const cplx* in, int q) const {
  cplx acc = 0.0;
  for (int t = 0; t < n_; ++t) acc += in[t] * w_[(static_cast<long>(q) * t) % n_];
  return acc / std::sqrt(static_cast<double>(n_));
}

SubcarrierMap make_map(const SystemConfig& cfg) {
  const int n = cfg.n_subcarriers;
  const int q = cfg.n_nulls();
  if (q < 1) throw std::invalid_argument("make_map: need at least one null subcarrier");

  SubcarrierMap map;
  map.null_indices.reserve(q);
  std::vector<char> is_null(n, 0);
  for (int i = 0; i < q; ++i) {
    const int idx = static_cast<int>((static_cast<long>(i) * n) / q);
    map.null_indices.push_back(idx);
    is_null[idx] = 1;
  }
  map.data_indices.reserve(n - q);
  for (int i = 0; i < n; ++i) {
    if (!is_null[i]) map.data_indices.push_back(i);
  }
  return map;
}

OfdmBurst modulate(const SystemConfig& cfg, const SubcarrierMap& map, rng::Stream& payload) {
  OfdmBurst burst;
  burst.n = cfg.n_subcarriers;
  burst.cp = cfg.cp_len;
  burst.n_symbols = cfg.n_symbols;
  burst.freq.assign(static_cast<std::size_t>(burst.n_symbols) * burst.n, cplx{0.0, 0.0});
  burst.time.assign(static_cast<std::size_t>(burst.n_symbols) * burst.sym_len(), cplx{0.0, 0.0});

  const Dft dft(burst.n);
  std::vector<cplx> body(burst.n);
  for (int g = 0; g < burst.n_symbols; ++g) {
    cplx* row = burst.freq_row(g);
    for (const int p : map.data_indices) {
      const double re = (payload.bits() & 1) ? kInvSqrt2 : -kInvSqrt2;
      const double im = (payload.bits() & 1) ? kInvSqrt2 : -kInvSqrt2;
      row[p] = {re, im};
    }
    dft.inverse(row, body.data());
    cplx* out = burst.time_row(g);
    for (int i = 0; i < burst.cp; ++i) out[i] = body[burst.n - burst.cp + i];
    for (int i = 0; i < burst.n; ++i) out[burst.cp + i] = body[i];
  }
  return burst;
}

OfdmBurst apply_link(const OfdmBurst& tx, const LinkChannel& link, double phi, int g0,
                     const SystemConfig& cfg, double tx_power_w, rng::Stream* noise) {
  OfdmBurst rx;
  rx.n = tx.n;
  rx.cp = tx.cp;
  rx.n_symbols = tx.n_symbols;
  rx.time.assign(tx.time.size(), cplx{0.0, 0.0});
  rx.applied_cfo = tx.applied_cfo + phi;

  const int len = tx.sym_len();
  const int taps = static_cast<int>(link.taps.size());
  // Makes the time-domain average transmit power equal tx_power_w.
  const double amp = std::sqrt(tx_power_w * tx.n / cfg.n_data);
  const double noise_var = cfg.noise_power_w();

  for (int g = 0; g < rx.n_symbols; ++g) {
    const cplx* in = tx.time_row(g);
    cplx* out = rx.time_row(g);
    const double sym_phase = kTwoPi * phi * static_cast<double>(g0 + g) * len / tx.n;
    for (int i = 0; i < len; ++i) {
      cplx acc = 0.0;
      const int lmax = std::min(taps - 1, i);
      for (int l = 0; l <= lmax; ++l) acc += link.taps[l] * in[i - l];
      acc *= amp;
      // Ramp referenced to the body start; phase is continuous across the
      // CP-prefixed stream.
      const double theta = sym_phase + kTwoPi * phi * (i - tx.cp) / tx.n;
      acc *= cplx{std::cos(theta), std::sin(theta)};
      if (noise != nullptr) acc += noise->cnormal(noise_var);
      out[i] = acc;
    }
  }
  return rx;
}

std::vector<std::vector<cplx>> stacked_receive(const SystemConfig& cfg,
                                               const std::vector<LinkChannel>& channels,
                                               const std::vector<double>& phis,
                                               const std::vector<OfdmBurst>& bursts,
                                               double tx_power_w, int g0) {
  const int n = cfg.n_subcarriers;
  const int n_ue = static_cast<int>(bursts.size());
  if (n_ue == 0) throw std::invalid_argument("stacked_receive: no bursts");
  const int m = static_cast<int>(channels.size()) / n_ue;
  if (m * n_ue != static_cast<int>(channels.size()) || channels.size() != phis.size()) {
    throw std::invalid_argument("stacked_receive: dimension mismatch");
  }
  const int taps = static_cast<int>(channels.front().taps.size());
  const int n_symbols = bursts.front().n_symbols;
  const int sym_len = n + cfg.cp_len;

  // Unitary DFT matrix F; F_L is its first `taps` columns.
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> f(static_cast<std::size_t>(n) * n);
  for (int q = 0; q < n; ++q) {
    for (int t = 0; t < n; ++t) {
      const double a = -kTwoPi * static_cast<double>(q) * t / n;
      f[static_cast<std::size_t>(q) * n + t] = cplx{std::cos(a), std::sin(a)} * inv_sqrt_n;
    }
  }

  const double amp = std::sqrt(tx_power_w * n / cfg.n_data);
  std::vector<std::vector<cplx>> result;
  result.reserve(n_symbols);

  std::vector<cplx> c(static_cast<std::size_t>(taps) * n);
  std::vector<cplx> d(static_cast<std::size_t>(taps) * n);
  for (int g = 0; g < n_symbols; ++g) {
    std::vector<cplx> y(static_cast<std::size_t>(m) * n, cplx{0.0, 0.0});
    for (int k = 0; k < n_ue; ++k) {
      const cplx* x = bursts[k].freq_row(g);
      // C = F_L^T X  (taps x n), column scaling by the mapped payload
      for (int l = 0; l < taps; ++l) {
        for (int q = 0; q < n; ++q) c[static_cast<std::size_t>(l) * n + q] = f[static_cast<std::size_t>(q) * n + l] * x[q];
      }
      // D = C F^H  (taps x n)
      for (int l = 0; l < taps; ++l) {
        for (int t = 0; t < n; ++t) {
          cplx acc = 0.0;
          for (int q = 0; q < n; ++q) {
            acc += c[static_cast<std::size_t>(l) * n + q] * std::conj(f[static_cast<std::size_t>(t) * n + q]);
          }
          d[static_cast<std::size_t>(l) * n + t] = acc;
        }
      }
      // Y += sqrt(N) * eta_g * (H^k D) o Phi^k, rows scaled by amp
      for (int mi = 0; mi < m; ++mi) {
        const LinkChannel& link = channels[static_cast<std::size_t>(mi) * n_ue + k];
        const double phi = phis[static_cast<std::size_t>(mi) * n_ue + k];
        const double eta = kTwoPi * phi * static_cast<double>(g0 + g) * sym_len / n;
        for (int t = 0; t < n; ++t) {
          cplx acc = 0.0;
          for (int l = 0; l < taps; ++l) {
            acc += link.taps[l] * d[static_cast<std::size_t>(l) * n + t];
          }
          const double theta = eta + kTwoPi * phi * t / n;
          y[static_cast<std::size_t>(mi) * n + t] +=
              std::sqrt(static_cast<double>(n)) * amp * acc * cplx{std::cos(theta), std::sin(theta)};
        }
      }
    }
    result.push_back(std::move(y));
  }
  return result;
}

}  // namespace hfsim
