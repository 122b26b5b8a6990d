#pragma once

#include <cstdint>
#include <random>

namespace dfsion {

// Seeded generator used for every stochastic step.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The library's own distributions are used on top of it (the
// std:: distributions are implementation-defined):
//   uniform(): top 53 bits of one engine draw, scaled to [0, 1).
//   normal():  Box-Muller on two uniform() draws; the second variate is cached.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// SplitMix64 finalizer applied to seed + stream * golden-ratio increment.
// Used to give every fixed-size sample chunk its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace dfsion
