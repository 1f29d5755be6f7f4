#include "bench.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "blakley/scheme.hpp"

namespace blakley::tools {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Uniform in [0, bound) by rejection on the top of the word range.
std::size_t uniform_below(RandomSource& rng, std::size_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t w = rng.next_word();
    if (w < limit) return static_cast<std::size_t>(w % bound);
  }
}

// First `k` entries of a Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> random_selection(RandomSource& rng, std::size_t n,
                                          std::size_t k) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(order[i], order[i + uniform_below(rng, n - i)]);
  }
  order.resize(k);
  return order;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config, RandomSource& rng,
                                std::ostream& notes) {
  std::vector<BenchRow> rows;
  rows.reserve(config.primes);
  std::size_t prime_index = 0;
  for (std::uint64_t candidate = 2; rows.size() < config.primes; ++candidate) {
    if (!is_prime(candidate)) continue;
    ++prime_index;
    if (candidate <= config.shareholders) {
      notes << "bench: skipping prime #" << prime_index << " (" << candidate
            << "): not greater than n=" << config.shareholders << '\n';
      continue;
    }
    const SchemeParams params(PrimeModulus(candidate), config.threshold,
                              config.shareholders);
    double split_total = 0.0;
    double reconstruct_total = 0.0;
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      const FieldElement secret = sample_uniform(rng, params.modulus());

      const auto split_start = Clock::now();
      const std::vector<Share> shares = split(secret, params, rng);
      split_total += seconds_since(split_start);

      std::vector<Share> chosen;
      for (std::size_t i :
           random_selection(rng, params.shareholders(), params.threshold())) {
        chosen.push_back(shares[i]);
      }
      const auto reconstruct_start = Clock::now();
      const FieldElement recovered = reconstruct(chosen);
      reconstruct_total += seconds_since(reconstruct_start);

      if (recovered != secret) {
        throw std::logic_error("bench: reconstruction disagreed with dealer");
      }
    }
    const double trials = config.trials == 0 ? 1.0 : static_cast<double>(config.trials);
    rows.push_back({prime_index, candidate, split_total / trials,
                    reconstruct_total / trials, config.trials});
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchHeader << '\n';
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::setprecision(9);
  for (const BenchRow& r : rows) {
    os << r.prime_index << ',' << r.prime << ',' << r.split_seconds << ','
       << r.reconstruct_seconds << ',' << r.trials << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace blakley::tools
