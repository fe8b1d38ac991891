#ifndef GSP_GENERATE_H_
#define GSP_GENERATE_H_

#include <cstdint>
#include <random>

#include "gsp/graph.h"

namespace gsp {

// Sampling on top of mt19937_64, whose raw output is fixed by the standard.
// The std distributions are not, so they are avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi], by rejection.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  // True with probability p, from 53 random bits.
  bool Bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

struct GenOptions {
  int price_lo = 1;
  int price_hi = 10;
  int fuel_lo = 1;
  int fuel_hi = 10;
  int max_attempts = 1000;
};

// Gilbert G(n, p) on unordered pairs, resampled until connected, then
// integer prices and fuels drawn uniformly; every edge becomes two arcs.
// Vertices are named "0".."n-1". Throws kGenerationFailed when no connected
// sample appears within max_attempts, kInvalidInstance on bad parameters.
FuelGraph GenBinomial(int n, double p, std::uint64_t seed, const GenOptions& opts = {});

}  // namespace gsp

#endif  // GSP_GENERATE_H_
