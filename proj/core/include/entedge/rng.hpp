#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>

namespace entedge {

// Next value of a splitmix64 stream; advances the state in place.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seeded random stream. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; the value transforms live here so results do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi], both bounds inclusive.
  int uniformInt(int lo, int hi) {
    assert(lo <= hi);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal deviate (Box-Muller). Consumes two uniform draws.
  double gaussian() {
    const double u = uniform01();
    const double v = uniform01();
    constexpr double kTwoPi = 6.283185307179586476925287;
    return std::sqrt(-2.0 * std::log(1.0 - u)) * std::cos(kTwoPi * v);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace entedge
