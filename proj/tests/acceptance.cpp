// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "blakley/analysis.hpp"
#include "blakley/modlinalg.hpp"
#include "blakley/scheme.hpp"
#include "blakley/share_io.hpp"
#include "commands.hpp"
#include "oracles.hpp"

namespace {

using namespace blakley;
using Clock = std::chrono::steady_clock;

// Thrown by check() to fail the current criterion with a message.
struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool condition, const std::string& what) {
  if (!condition) throw CriterionFailure(what);
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Share> subset_of(const std::vector<Share>& all,
                             std::span<const std::size_t> picks) {
  std::vector<Share> out;
  for (std::size_t i : picks) out.push_back(all[i]);
  return out;
}

// 1. Worked example: all ten triples of the five planes over GF(73).
void example_example_regression() {
  const auto start = Clock::now();
  const char* records[] = {
      "BLK1 p=73 t=3 n=5 i=1 a=4,19 c=68\n", "BLK1 p=73 t=3 n=5 i=2 a=52,27 c=10\n",
      "BLK1 p=73 t=3 n=5 i=3 a=36,65 c=18\n", "BLK1 p=73 t=3 n=5 i=4 a=57,12 c=16\n",
      "BLK1 p=73 t=3 n=5 i=5 a=34,19 c=49\n"};
  std::vector<Share> shares;
  for (const char* r : records) shares.push_back(decode_share(r));

  std::size_t subsets = 0;
  for_each_subset(5, 3, [&](std::span<const std::size_t> picks) {
    check(reconstruct(subset_of(shares, picks)).value() == 42, "a triple missed 42");
    ++subsets;
    return true;
  });
  check(subsets == 10, "expected 10 triples");
  const std::size_t first[] = {0, 1, 2};
  const SecretPoint q = reconstruct_point(subset_of(shares, first));
  check(q.coords() == ModVector::from_signed(PrimeModulus(73), {42, 29, 57}),
        "point for {1,2,3} is not (42, 29, 57)");
  check(elapsed(start) < 1.0, "runtime exceeded 1 s");
}

// 2. Round trip over 1000 random configurations.
void round_trip_property() {
  const auto start = Clock::now();
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 8; primes.size() < 25; ++c) {
    if (oracle::is_prime_trial(c)) primes.push_back(c);
  }
  check(primes.front() == 11 && primes.back() == 109, "prime list");
  std::mt19937_64 gen(20240601);
  for (int i = 0; i < 1000; ++i) {
    const PrimeModulus p(primes[gen() % primes.size()]);
    const std::size_t t = 2 + gen() % 3;
    const std::size_t n = t + gen() % 5;
    const SchemeParams params(p, t, n);
    SeededRandom rng(gen());
    const FieldElement secret = sample_uniform(rng, p);
    const std::vector<Share> shares = split(secret, params, rng);
    for_each_subset(n, t, [&](std::span<const std::size_t> picks) {
      check(reconstruct(subset_of(shares, picks)) == secret, "subset missed secret");
      return true;
    });
  }
  check(elapsed(start) < 60.0, "runtime exceeded 60 s");
}

// 3. Every sub-threshold subset of a dealt set leaves x_1 uniform.
void perfect_secrecy_at_x1() {
  for (std::uint64_t pv : {3ULL, 5ULL, 7ULL, 11ULL}) {
    const PrimeModulus p(pv);
    for (std::size_t t : {2U, 3U}) {
      for (std::size_t n = t; n <= std::min<std::size_t>(pv, t + 2); ++n) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          SeededRandom rng(seed * 1000 + pv * 10 + t + n);
          const SchemeParams params(p, t, n);
          const std::vector<Share> shares = split(sample_uniform(rng, p), params, rng);
          check(admissible(shares), "split returned a non-admissible set");
          for (std::size_t k = 0; k < t; ++k) {
            std::uint64_t expected = 1;
            for (std::size_t e = 0; e + 1 + k < t; ++e) expected *= pv;
            for_each_subset(n, k, [&](std::span<const std::size_t> picks) {
              const LeakageReport r = candidate_secrets(params, subset_of(shares, picks));
              check(r.candidate_counts.size() == pv, "some secret value excluded");
              for (const auto& [x, count] : r.candidate_counts) {
                check(count == expected, "non-uniform candidate count");
              }
              check(std::abs(r.entropy_bits - std::log2(static_cast<double>(pv))) <= 1e-12,
                    "entropy differs from log2 p");
              check(!r.pinned, "pinned below threshold");
              return true;
            });
          }
        }
      }
    }
  }
}

// 4. Planes 1 and 5 share y-coefficient 19 and pin the secret.
void leak_detection() {
  const PrimeModulus m73(73);
  const SchemeParams params(m73, 3, 5);
  const std::vector<Share> pair = {Share(1, {4, 19}, 68, params),
                                   Share(5, {34, 19}, 49, params)};
  const LeakageReport r = candidate_secrets(params, pair);
  check(r.pinned, "pair {1,5} not flagged as pinned");
  check(r.candidate_counts.begin()->first == 42, "pinned candidate is not 42");
  // Eliminating z: x = (c5 - c1) * (a1 - a5)^-1.
  const FieldElement x = (FieldElement(49, m73) - FieldElement(68, m73)) *
                         inv(FieldElement(4, m73) - FieldElement(34, m73));
  check(x.value() == 42, "algebraic path disagrees");
  check(!subset_hides_secret(pair), "admissibility condition (b) misses the pair");

  // Scaled-down analogues with equal second coefficients.
  std::mt19937_64 gen(44);
  for (std::uint64_t pv : {5ULL, 7ULL, 11ULL}) {
    const PrimeModulus m(pv);
    const SchemeParams small(m, 3, 5);
    for (int i = 0; i < 20; ++i) {
      const oracle::Int qx = gen() % pv, qy = gen() % pv, qz = gen() % pv;
      const oracle::Int a1 = gen() % pv, b = gen() % pv;
      const oracle::Int a5 = (a1 + 1 + gen() % (pv - 1)) % pv;
      const auto c_of = [&](oracle::Int a) {
        return static_cast<Residue>(oracle::reduce(qz - a * qx - b * qy, pv));
      };
      const std::vector<Share> leak = {
          Share(1, {static_cast<Residue>(a1), static_cast<Residue>(b)}, c_of(a1), small),
          Share(5, {static_cast<Residue>(a5), static_cast<Residue>(b)}, c_of(a5), small)};
      const LeakageReport lr = candidate_secrets(small, leak);
      check(lr.pinned, "scaled analogue not pinned");
      check(lr.candidate_counts.begin()->first == static_cast<Residue>(qx),
            "scaled analogue pinned to wrong value");
      const FieldElement alg =
          (FieldElement(leak[1].constant, m) - FieldElement(leak[0].constant, m)) *
          inv(FieldElement(leak[0].coeffs[0], m) - FieldElement(leak[1].coeffs[0], m));
      check(alg.value() == static_cast<Residue>(qx), "scaled algebraic path wrong");
    }
  }
}

// 5. Gauss-Jordan vs exhaustive search, determinant vs cofactor expansion.
void solver_oracle_equivalence() {
  std::mt19937_64 gen(555);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  int unique = 0;
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t pv = primes[i % 4];
    const PrimeModulus m(pv);
    DenseMatrix<Residue> a(3, 3);
    DenseVector<Residue> b(3);
    oracle::Rows rows(3, oracle::Row(3));
    oracle::Row rhs(3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) rows[r][c] = static_cast<oracle::Int>(a(r, c) = gen() % pv);
      rhs[r] = static_cast<oracle::Int>(b(r) = gen() % pv);
    }
    const ModMatrix am(m, a);
    const ModVector bv(m, b);
    const oracle::Int det = oracle::cofactor_det(rows, static_cast<oracle::Int>(pv));
    check(determinant(am).value() == static_cast<Residue>(det), "determinant mismatch");
    const oracle::Rows sols = oracle::exhaustive_solutions(rows, rhs, static_cast<oracle::Int>(pv));
    if (det == 0) {
      check(sols.size() != 1, "singular system with a unique solution");
      bool threw = false;
      try {
        solve(am, bv);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::SingularMatrix;
      }
      check(threw, "solve accepted a singular matrix");
      continue;
    }
    check(sols.size() == 1, "nonsingular system without a unique solution");
    const ModVector x = solve(am, bv);
    for (int j = 0; j < 3; ++j) {
      check(x.residues()(j) == static_cast<Residue>(sols[0][j]), "solution mismatch");
    }
    ++unique;
  }
  check(unique > 0, "no nonsingular samples");
}

// 6. Cost trend over the first 100 usable primes.
void bench_trend() {
  const auto start = Clock::now();
  const auto csv = std::filesystem::temp_directory_path() / "blakley_acceptance_bench.csv";
  const std::string out = csv.string();
  const char* argv[] = {"blakley", "bench", "--primes", "100", "--shares", "5",
                        "--threshold", "3", "--out", out.c_str()};
  std::ostringstream sink_out;
  std::ostringstream sink_err;
  const int code = tools::run(static_cast<int>(std::size(argv)), argv, sink_out, sink_err);
  check(code == tools::kOk, "bench exited with " + std::to_string(code));

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  check(line == tools::kBenchHeader, "bad header");
  std::vector<double> totals;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string idx, prime, split_s, recon_s;
    std::getline(fields, idx, ',');
    std::getline(fields, prime, ',');
    std::getline(fields, split_s, ',');
    std::getline(fields, recon_s, ',');
    totals.push_back(std::stod(split_s) + std::stod(recon_s));
  }
  std::filesystem::remove(csv);
  check(totals.size() == 100, "expected 100 rows, got " + std::to_string(totals.size()));
  double first = 0.0;
  double last = 0.0;
  for (int i = 0; i < 10; ++i) {
    first += totals[i] / 10.0;
    last += totals[90 + i] / 10.0;
  }
  std::printf("      first-decile mean %.3e s, last-decile mean %.3e s\n", first, last);
  check(last >= first, "mean cost over the last decile is below the first decile");
  check(elapsed(start) < 300.0, "runtime exceeded 5 min");
}

// 7. Byte-exact round trip and malformed-record error classes.
void serialization() {
  std::mt19937_64 gen(7777);
  const std::uint64_t primes[] = {2, 3, 73, 65537, 4294967291ULL, kMaxModulus - 57};
  for (int i = 0; i < 1000; ++i) {
    const PrimeModulus p(primes[gen() % std::size(primes)]);
    const std::size_t t = 2 + gen() % 6;
    const std::size_t n = t + gen() % (kMaxShareholders - t + 1);
    std::vector<Residue> coeffs(t - 1);
    for (Residue& a : coeffs) a = gen() % p.value();
    const Share s(1 + gen() % n, coeffs, gen() % p.value(), SchemeParams(p, t, n));
    const std::string record = encode_share(s);
    check(decode_share(record) == s, "decode(encode(s)) != s");
    check(encode_share(decode_share(record)) == record, "re-encoding differs");
  }
  const std::pair<const char*, ErrorCode> bad[] = {
      {"BLK2 p=73 t=3 n=5 i=1 a=4,19 c=68", ErrorCode::BadMagic},
      {"BLK1 p=73 t=3 n=5 i=1 a=4 c=68", ErrorCode::MalformedField},
      {"BLK1 t=3 p=73 n=5 i=1 a=4,19 c=68", ErrorCode::MalformedField},
      {"BLK1 p=73 t=3 n=5 i=1 a=04,19 c=68", ErrorCode::MalformedField},
      {"BLK1 p=73 t=3 n=5 i=6 a=4,19 c=68", ErrorCode::RangeViolation},
      {"BLK1 p=73 t=3 n=5 i=1 a=4,19 c=73", ErrorCode::RangeViolation},
      {"BLK1 p=4 t=2 n=2 i=1 a=1 c=1", ErrorCode::NonPrimeModulus},
  };
  for (const auto& [record, code] : bad) {
    bool matched = false;
    try {
      decode_share(record);
    } catch (const Error& e) {
      matched = e.code() == code;
    }
    check(matched, std::string("wrong error class for: ") + record);
  }
}

// 8. Secrecy t and integrity n - t + 1 across a sweep.
void threshold_arithmetic() {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      const ThresholdSummary s = corruption_thresholds(t, n);
      check(s.secrecy_corruptions == t, "secrecy != t");
      check(s.integrity_corruptions == n - t + 1, "integrity != n - t + 1");
      check(s.secrecy_corruptions + s.integrity_corruptions == n + 1, "sum != n + 1");
    }
  }
  const ThresholdSummary five = corruption_thresholds(SchemeParams(PrimeModulus(73), 3, 5));
  check(five.secrecy_corruptions == 3 && five.integrity_corruptions == 3, "(3, 5)");
  const ThresholdSummary eleven = corruption_thresholds(6, 11);
  check(eleven.secrecy_corruptions == 6 && eleven.integrity_corruptions == 6, "(6, 11)");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void()>> criteria[] = {
      {"AC1 worked example regression (10 triples -> 42, point (42,29,57))",
       example_example_regression},
      {"AC2 round trip, 1000 random (p, t, n) cases", round_trip_property},
      {"AC3 uniform posterior for every sub-threshold subset", perfect_secrecy_at_x1},
      {"AC4 analyzer pins the {1,5} pair to 42", leak_detection},
      {"AC5 solver and determinant vs brute-force oracles", solver_oracle_equivalence},
      {"AC6 bench: 100 rows, last decile >= first decile", bench_trend},
      {"AC7 share record round trip and error classes", serialization},
      {"AC8 corruption thresholds t and n - t + 1", threshold_arithmetic},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    std::string error;
    try {
      run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", error.empty() ? "PASS" : "FAIL", name,
                elapsed(start), error.empty() ? "" : ": ", error.c_str());
    std::fflush(stdout);
    if (!error.empty()) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
