#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace infoimb {

/// Deterministic random source used by every stochastic component.
///
/// Engine: std::mt19937_64 constructed directly from the 64-bit seed (the
/// engine's output sequence is fully specified by the C++ standard).
/// Uniform doubles take the top 53 bits: (x >> 11) * 2^-53, giving [0, 1).
/// Normals use the Box-Muller transform on consecutive uniform pairs,
/// with the cosine branch returned first and the sine branch cached.
/// Re-implementations that follow this recipe reproduce streams exactly.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal deviate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo would bias; use Lemire-style rejection.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % n;
    }
  }

  /// k distinct indices drawn uniformly from {0, .., n-1}, in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline std::vector<std::size_t> PortableRng::sample_without_replacement(
    std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && i < n; ++i) {
    const std::size_t j = i + std::size_t(below(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace infoimb
