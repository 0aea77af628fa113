#pragma once

#include <cstdint>
#include <random>

namespace behaviocog {

// Deterministic random source threaded through every randomized operation.
// Bounded integers use rejection sampling on the raw engine output, so a
// seed reproduces the same stream on any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for partition `stream` of a computation seeded by `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal deviate (Box-Muller, no cached spare).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace behaviocog
