#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace disclqg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic per-stream Gaussian source. Each (seed, stream) pair yields
/// an independent, reproducible sequence regardless of which thread consumes
/// it: the engine is mt19937_64 (bit-exact by the standard) and the normals
/// come from a hand-rolled Box-Muller on 53-bit uniforms, so no
/// implementation-defined distribution code is involved.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream)
      : gen_(splitmix64(seed ^ splitmix64(stream + 0x51AB5F2DULL))) {}

  double uniform01() {  // in (0, 1]
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace disclqg
