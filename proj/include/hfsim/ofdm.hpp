#ifndef HFSIM_OFDM_HPP
#define HFSIM_OFDM_HPP

#include <complex>
#include <vector>

#include "hfsim/channel.hpp"
#include "hfsim/config.hpp"
#include "hfsim/rng.hpp"

namespace hfsim {

using cplx = std::complex<double>;

/// Data/null subcarrier assignment over the N-point grid.
struct SubcarrierMap {
  std::vector<int> data_indices;  // ascending, length P_k
  std::vector<int> null_indices;  // ascending, length Q = N - P_k
};

/// A burst of n_symbols OFDM symbols. `freq` is the frequency-domain
/// payload (zero on nulls), `time` the CP-prefixed sample stream; both are
/// row-major with one row per OFDM symbol.
struct OfdmBurst {
  int n = 0;          // subcarriers per symbol
  int cp = 0;         // cyclic prefix samples
  int n_symbols = 0;  // L_b
  std::vector<cplx> freq;  // n_symbols x n
  std::vector<cplx> time;  // n_symbols x (n + cp)
  double applied_cfo = 0.0;

  int sym_len() const { return n + cp; }
  cplx* time_row(int g) { return time.data() + static_cast<std::size_t>(g) * sym_len(); }
  const cplx* time_row(int g) const { return time.data() + static_cast<std::size_t>(g) * sym_len(); }
  /// CP-stripped N-sample body of symbol g.
  const cplx* body(int g) const { return time_row(g) + cp; }
  cplx* freq_row(int g) { return freq.data() + static_cast<std::size_t>(g) * n; }
  const cplx* freq_row(int g) const { return freq.data() + static_cast<std::size_t>(g) * n; }
};

/// Direct O(N^2) unitary DFT with precomputed twiddles. Plenty at N = 32.
class Dft {
 public:
  explicit Dft(int n);
  int size() const { return n_; }
  /// X_q = sum_n x_n e^{-j 2 pi q n / N} / sqrt(N)
  void forward(const cplx* in, cplx* out) const;
  /// x_n = sum_q X_q e^{+j 2 pi q n / N} / sqrt(N)
  void inverse(const cplx* in, cplx* out) const;
  /// Single forward bin.
  cplx bin(const cplx* in, int q) const;

 private:
  int n_;
  std::vector<cplx> w_;  // e^{-j 2 pi t / N}, t = 0..N-1
};

/// Null subcarriers at floor(i*N/Q), i = 0..Q-1; the rest carry data.
/// Throws when the map would have no nulls.
SubcarrierMap make_map(const SystemConfig& cfg);

/// Random QPSK payload on data carriers ((±1±j)/sqrt(2)), unitary IDFT per
/// symbol, cyclic prefix prepended. Unit average power per data subcarrier;
/// no CFO or transmit power scaling applied yet.
OfdmBurst modulate(const SystemConfig& cfg, const SubcarrierMap& map, rng::Stream& payload);

/// Propagates a transmit burst over one link: transmit power scaling,
/// per-symbol tap convolution (the CP absorbs the tail), the CFO phase ramp
/// e^{j 2 pi phi n / N} across each body plus the phase accumulated over
/// whole symbols starting at index g0, then per-sample AWGN at the
/// configured noise power when `noise` is non-null.
OfdmBurst apply_link(const OfdmBurst& tx, const LinkChannel& link, double phi, int g0,
                     const SystemConfig& cfg, double tx_power_w, rng::Stream* noise);

/// Reference construction of the stacked M x N receive matrix for one OFDM
/// symbol via explicit DFT-matrix products and the per-AAU Hadamard phase
/// ramp, summed over UEs. Noise-free; used as the algebraic counterpart of
/// apply_link in equivalence checks.
///
/// channels[m*K + k] is the UE k -> AAU m link; phis[m*K + k] the matching
/// CFO; bursts[k] the UE payloads; tx_power_w the per-UE transmit power.
std::vector<std::vector<cplx>> stacked_receive(const SystemConfig& cfg,
                                               const std::vector<LinkChannel>& channels,
                                               const std::vector<double>& phis,
                                               const std::vector<OfdmBurst>& bursts,
                                               double tx_power_w, int g0 = 0);

}  // namespace hfsim

#endif  // HFSIM_OFDM_HPP
