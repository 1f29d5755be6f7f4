#ifndef BLAKLEY_TOOLS_BENCH_HPP
#define BLAKLEY_TOOLS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "blakley/random.hpp"

namespace blakley::tools {

struct BenchRow {
  std::size_t prime_index;  // 1-based position in 2, 3, 5, 7, ...
  std::uint64_t prime;
  double split_seconds;        // mean over trials
  double reconstruct_seconds;  // mean over trials
  std::size_t trials;
};

struct BenchConfig {
  std::size_t primes = 100;  // rows to produce
  std::size_t shareholders = 5;
  std::size_t threshold = 3;
  std::size_t trials = 10;
};

inline constexpr const char* kBenchHeader =
    "prime_index,prime,split_seconds,reconstruct_seconds,trials";

/// Times split and reconstruct (one random t-subset per trial) for each of
/// the first `config.primes` primes greater than n. Each skipped prime is
/// reported once to `notes`. Throws AdmissibilityExhausted from split.
std::vector<BenchRow> run_bench(const BenchConfig& config, RandomSource& rng,
                                std::ostream& notes);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace blakley::tools

#endif  // BLAKLEY_TOOLS_BENCH_HPP
