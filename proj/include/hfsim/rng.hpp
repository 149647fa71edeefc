#ifndef HFSIM_RNG_HPP
#define HFSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace hfsim::rng {

// splitmix64 finalizer; used to combine seed material.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// FNV-1a over a purpose label, so streams are keyed by name rather than
// by brittle integer enums.
inline std::uint64_t tag(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic random stream. Distributions are hand-rolled on top of
/// std::mt19937_64 so that draws are bit-identical across platforms and
/// standard libraries.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller, standard normal.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // Circularly-symmetric complex Gaussian with E[|z|^2] = var.
  std::complex<double> cnormal(double var) {
    const double s = std::sqrt(var * 0.5);
    return {s * normal(), s * normal()};
  }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Stream factory: (base seed, purpose label, up to two indices) -> stream.
/// Adding a new purpose never perturbs draws of existing purposes.
inline Stream make_stream(std::uint64_t base, std::string_view purpose,
                          std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t s = combine(base, tag(purpose));
  s = combine(s, a + 1);
  s = combine(s, b + 1);
  return Stream(s);
}

/// Trial seed derivation: the documented splitting rule used by the
/// experiment driver.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return combine(master_seed, combine(tag("trial"), trial));
}

}  // namespace hfsim::rng

#endif  // HFSIM_RNG_HPP
