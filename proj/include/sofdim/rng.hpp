#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace sofdim {

/// Counter-based splittable generator. Streams are keyed by (seed, tag) so
/// parallel trials stay reproducible regardless of scheduling. The mixing
/// function is splitmix64 over a keyed counter.
class Rng {
public:
  Rng(std::uint64_t seed, std::string_view tag) : key_(mix(seed ^ fnv(tag))) {}

  Rng split(std::string_view tag) const { return Rng(key_, tag); }
  Rng split(std::uint64_t salt) const {
    Rng r = *this;
    r.key_ = mix(key_ ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    r.ctr_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller (kept local for cross-library determinism).
  double next_gaussian() {
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Fisher-Yates shuffle of {0, ..., n-1}.
  std::vector<int> next_permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

private:
  explicit Rng(std::uint64_t raw_key, std::string_view tag)
      : key_(mix(raw_key ^ fnv(tag))) {}

  static std::uint64_t fnv(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t ctr_ = 0;
};

}  // namespace sofdim
