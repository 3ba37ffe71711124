#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace symlab {

// Deterministic stream RNG. Every stochastic component derives its stream
// from (seed, component label, index), so runs reproduce byte-identically
// regardless of how work is scheduled. SplitMix64 core; uniform doubles are
// built from the top 53 bits, so sequences do not depend on libstdc++
// distribution internals.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view component,
            std::uint64_t index) {
    state_ = mix(seed ^ 0x9e3779b97f4a7c15ull);
    for (char c : component) state_ = mix(state_ ^ static_cast<unsigned char>(c));
    state_ = mix(state_ ^ (index + 0x2545f4914f6cdd1dull));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace symlab
