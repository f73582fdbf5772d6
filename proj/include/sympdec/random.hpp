#pragma once

#include <cstdint>
#include <random>

namespace sympdec {

/// Seeded generator passed by reference through the random constructions.
/// Integer draws use plain modular reduction of mt19937_64 output so that a
/// seed reproduces identical matrices across standard library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-sample seed from (seed, index) via a splitmix64 round, so
/// that sample k does not depend on how many samples ran before it.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sympdec
