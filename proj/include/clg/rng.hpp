#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace clg {

// splitmix64 stream: a single 64-bit state advanced by a fixed increment and
// mixed on output. Identical seed gives an identical stream; split() derives
// an independent per-purpose stream without advancing the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const double u = uniform();
    std::uint64_t v = static_cast<std::uint64_t>(u * static_cast<double>(bound));
    return v >= bound ? bound - 1 : v;
  }

  // Derived stream for a named purpose; parent state is untouched.
  Rng split(std::uint64_t purpose) const {
    std::uint64_t z = state_ ^ (0xD1B54A32D192ED03ull * (purpose + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return Rng(z ^ (z >> 31));
  }

  Rng split(std::string_view purpose) const {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : purpose) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return split(h);
  }

  std::uint64_t state() const { return state_; }
  void set_state(std::uint64_t s) { state_ = s; }

 private:
  std::uint64_t state_;
};

}  // namespace clg
