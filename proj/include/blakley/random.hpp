#ifndef BLAKLEY_RANDOM_HPP
#define BLAKLEY_RANDOM_HPP

#include <cstdint>
#include <random>

#include "blakley/field.hpp"

namespace blakley {

/// Source of uniformly distributed 64-bit words. Instances are not
/// thread-safe; give each thread its own.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_word() = 0;
};

/// Reproducible stream: the same seed yields the same words on every
/// conforming standard library (mt19937_64 is fully specified).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_word() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Operating-system entropy via std::random_device.
class EntropyRandom final : public RandomSource {
 public:
  std::uint64_t next_word() override;

 private:
  std::random_device device_;
};

/// Uniform over {0, ..., p-1}: masks words to the bit width of p - 1 and
/// rejects values >= p, so there is no modulo bias.
FieldElement sample_uniform(RandomSource& rng, PrimeModulus p);

}  // namespace blakley

#endif  // BLAKLEY_RANDOM_HPP
