#pragma once

#include <cstdint>
#include <vector>

#include "parab/points.hpp"

namespace parab {

// splitmix64; the fixed generator documented for reproducible random-pair suites.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

UPoint sample_upoint(SplitMix64& rng);
std::vector<double> sample_sphere(int d, SplitMix64& rng);
SurfacePoint sample_surface_point(int d, SplitMix64& rng);
std::vector<double> sample_ball(int d, SplitMix64& rng);
SolidPoint sample_solid_point(int d, SplitMix64& rng);

}  // namespace parab
