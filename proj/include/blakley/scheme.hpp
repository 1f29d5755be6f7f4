#ifndef BLAKLEY_SCHEME_HPP
#define BLAKLEY_SCHEME_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "blakley/field.hpp"
#include "blakley/modlinalg.hpp"
#include "blakley/random.hpp"

namespace blakley {

inline constexpr std::size_t kMaxShareholders = 64;

/// Public geometry of a (t, n) scheme over GF(p).
/// Invariant: 2 <= t <= n <= 64, otherwise InvalidParams.
class SchemeParams {
 public:
  SchemeParams(PrimeModulus p, std::size_t threshold, std::size_t shareholders);

  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t threshold() const noexcept { return t_; }
  std::size_t shareholders() const noexcept { return n_; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

 private:
  PrimeModulus p_;
  std::size_t t_;
  std::size_t n_;
};

/// The common intersection point Q of every share's hyperplane. The first
/// coordinate is the secret.
class SecretPoint {
 public:
  /// Throws InvalidParams unless coords has length t over the scheme field.
  SecretPoint(ModVector coords, SchemeParams params);

  const ModVector& coords() const noexcept { return coords_; }
  const SchemeParams& params() const noexcept { return params_; }
  FieldElement secret() const { return coords_[0]; }

 private:
  ModVector coords_;
  SchemeParams params_;
};

/// Shareholder `index` owns the hyperplane
///   x_t = a_1 x_1 + ... + a_{t-1} x_{t-1} + c   (mod p).
struct Share {
  std::size_t index;
  std::vector<Residue> coeffs;  // a_1 .. a_{t-1}
  Residue constant;             // c
  SchemeParams params;

  /// Throws InvalidParams on index out of [1, n], wrong arity or
  /// unreduced values.
  Share(std::size_t index, std::vector<Residue> coeffs, Residue constant,
        SchemeParams params);

  /// Normal vector (a_1, ..., a_{t-1}, -1); the hyperplane is normal . x = -c.
  ModVector normal() const;

  friend bool operator==(const Share&, const Share&) = default;
};

struct SplitOptions {
  /// Whole-set restarts before AdmissibilityExhausted.
  std::size_t max_attempts = 1024;
  /// Candidate hyperplanes drawn for one shareholder before the partial set
  /// is abandoned and the dealing restarts.
  std::size_t max_draws_per_share = 256;
};

struct Dealing {
  SecretPoint point;
  std::vector<Share> shares;
  std::size_t attempts;  // whole-set attempts, including the accepted one
  std::size_t draws;     // candidate hyperplanes drawn in total
};

/// Dealer side. Draws the remaining point coordinates uniformly, then adds
/// hyperplanes through the point one shareholder at a time; each candidate is
/// drawn uniformly and redrawn until the set built so far stays admissible.
/// Admissibility depends only on the coefficients, so the point stays
/// uniform and independent of the accepted shares.
/// Throws InvalidParams (secret not in the scheme field) or
/// AdmissibilityExhausted.
Dealing deal(const FieldElement& secret, const SchemeParams& params,
             RandomSource& rng, const SplitOptions& options = {});

std::vector<Share> split(const FieldElement& secret, const SchemeParams& params,
                         RandomSource& rng, const SplitOptions& options = {});

/// Rows are the normal vectors of the given shares, in order.
ModMatrix normal_matrix(std::span<const Share> shares);

/// Every t-subset has a nonsingular normal matrix, and no subset of fewer
/// than t shares has e_1 in its row space (so none of them fixes x_1).
/// Throws MixedParams or DuplicateShareIndex.
bool admissible(std::span<const Share> shares);

/// Condition (a) alone, for one t-subset.
bool subset_nonsingular(std::span<const Share> subset);
/// Condition (b) alone, for one subset below the threshold.
bool subset_hides_secret(std::span<const Share> subset);

/// Combiner side: exactly t shares. Throws WrongShareCount, MixedParams,
/// DuplicateShareIndex or SingularShares.
SecretPoint reconstruct_point(std::span<const Share> shares);
FieldElement reconstruct(std::span<const Share> shares);

/// Throws MixedParams when the share and point belong to different schemes.
bool verify_share(const Share& share, const SecretPoint& point);

/// Calls `visit` with each k-subset of {0, ..., n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    if (!visit(std::span<const std::size_t>(pick))) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace blakley

#endif  // BLAKLEY_SCHEME_HPP
