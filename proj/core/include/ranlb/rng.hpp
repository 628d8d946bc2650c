#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace ranlb::rng {

// All randomness in the simulator flows through this header. mt19937_64 output
// is pinned by the standard, and the distribution transforms below are our own,
// so a (seed, stream) pair produces the same draws on every platform. The
// std::*_distribution adaptors are deliberately not used: their algorithms are
// implementation-defined.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Named substream derivation: changing how one stream is consumed never
// perturbs the others.
inline std::uint64_t derive(std::uint64_t master, std::string_view name) {
  return splitmix64(master ^ fnv1a(name));
}
inline std::uint64_t derive(std::uint64_t master, std::string_view name,
                            std::uint64_t index) {
  return splitmix64(derive(master, name) ^ splitmix64(index));
}

inline double to_unit(std::uint64_t bits) {
  // (0, 1]: never returns 0 so log() is always safe.
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  double uniform01() { return to_unit(next_u64()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n) via bitmask rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    std::uint64_t v;
    do {
      v = next_u64() & mask;
    } while (v >= n);
    return v;
  }

  // Box-Muller, one value per call (the sibling draw is discarded to keep the
  // stream position a pure function of the call count).
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform01();
    double u2 = uniform01();
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + stddev * z;
  }

  double exponential(double mean = 1.0) { return -mean * std::log(uniform01()); }

  // Knuth's product method; fine for the packet-arrival means used here (< ~50).
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

  template <typename T>
  const T& choice(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 eng_;
};

// Counter-based draws for the channel: random access by index tuple, nothing
// stored, so stale-CSI lookbacks and replays are cheap and exact.
inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b, std::uint64_t c = 0,
                             std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(a));
  h = splitmix64(h ^ splitmix64(b ^ 0x517cc1b727220a95ULL));
  h = splitmix64(h ^ splitmix64(c ^ 0x2545f4914f6cdd1dULL));
  h = splitmix64(h ^ splitmix64(d ^ 0x9e3779b97f4a7c15ULL));
  return h;
}

inline double hash_unit(std::uint64_t key) { return to_unit(splitmix64(key)); }

}  // namespace ranlb::rng
