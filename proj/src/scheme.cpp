#include "blakley/scheme.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace blakley {

namespace {

const SchemeParams& common_params(std::span<const Share> shares) {
  const SchemeParams& first = shares.front().params;
  for (const Share& s : shares) {
    if (!(s.params == first)) {
      throw Error(ErrorCode::MixedParams, "shares come from different schemes");
    }
  }
  return first;
}

void require_distinct_indices(std::span<const Share> shares) {
  std::vector<std::size_t> seen;
  seen.reserve(shares.size());
  for (const Share& s : shares) seen.push_back(s.index);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::DuplicateShareIndex, "share index repeated");
  }
}

std::vector<Share> gather(std::span<const Share> shares,
                          std::span<const std::size_t> picks) {
  std::vector<Share> out;
  out.reserve(picks.size());
  for (std::size_t i : picks) out.push_back(shares[i]);
  return out;
}

// With `prefix` admissible, prefix + candidate is admissible iff every
// subset that contains the candidate passes the same two conditions.
bool extends_admissibly(const std::vector<Share>& prefix, const Share& candidate) {
  const std::size_t t = candidate.params.threshold();
  std::vector<Share> subset;
  auto with_candidate = [&](std::span<const std::size_t> picks) {
    subset = gather(prefix, picks);
    subset.push_back(candidate);
  };

  bool ok = true;
  for_each_subset(prefix.size(), t - 1, [&](std::span<const std::size_t> picks) {
    with_candidate(picks);
    ok = subset_nonsingular(subset);
    return ok;
  });
  if (!ok) return false;

  const std::size_t below = std::min(t - 2, prefix.size());
  for_each_subset(prefix.size(), below, [&](std::span<const std::size_t> picks) {
    with_candidate(picks);
    ok = subset_hides_secret(subset);
    return ok;
  });
  return ok;
}

}  // namespace

SchemeParams::SchemeParams(PrimeModulus p, std::size_t threshold,
                           std::size_t shareholders)
    : p_(p), t_(threshold), n_(shareholders) {
  if (t_ < 2) throw Error(ErrorCode::InvalidParams, "threshold must be >= 2");
  if (t_ > n_) {
    throw Error(ErrorCode::InvalidParams, "threshold exceeds shareholder count");
  }
  if (n_ > kMaxShareholders) {
    throw Error(ErrorCode::InvalidParams, "at most 64 shareholders");
  }
}

SecretPoint::SecretPoint(ModVector coords, SchemeParams params)
    : coords_(std::move(coords)), params_(params) {
  if (coords_.modulus() != params_.modulus() ||
      static_cast<std::size_t>(coords_.size()) != params_.threshold()) {
    throw Error(ErrorCode::InvalidParams, "point does not match scheme");
  }
}

Share::Share(std::size_t index_, std::vector<Residue> coeffs_, Residue constant_,
             SchemeParams params_)
    : index(index_), coeffs(std::move(coeffs_)), constant(constant_),
      params(params_) {
  const std::uint64_t p = params.modulus().value();
  if (index < 1 || index > params.shareholders()) {
    throw Error(ErrorCode::InvalidParams,
                "share index " + std::to_string(index) + " outside 1.." +
                    std::to_string(params.shareholders()));
  }
  if (coeffs.size() + 1 != params.threshold()) {
    throw Error(ErrorCode::InvalidParams, "coefficient count must be t-1");
  }
  if (constant >= p ||
      std::any_of(coeffs.begin(), coeffs.end(), [p](Residue a) { return a >= p; })) {
    throw Error(ErrorCode::InvalidParams, "share value not reduced mod p");
  }
}

ModVector Share::normal() const {
  const PrimeModulus m = params.modulus();
  DenseVector<Residue> v(static_cast<Index>(coeffs.size() + 1));
  for (std::size_t j = 0; j < coeffs.size(); ++j) v(static_cast<Index>(j)) = coeffs[j];
  v(v.size() - 1) = mod_neg(1, m);
  return {m, std::move(v)};
}

Dealing deal(const FieldElement& secret, const SchemeParams& params,
             RandomSource& rng, const SplitOptions& options) {
  const PrimeModulus m = params.modulus();
  if (secret.modulus() != m) {
    throw Error(ErrorCode::InvalidParams, "secret is not an element of GF(" +
                                              std::to_string(m.value()) + ")");
  }
  const std::size_t t = params.threshold();
  const std::size_t n = params.shareholders();
  std::size_t draws = 0;

  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    ModVector coords(m, static_cast<Index>(t));
    coords.set(0, secret);
    for (std::size_t j = 1; j < t; ++j) {
      coords.set(static_cast<Index>(j), sample_uniform(rng, m));
    }
    const Residue last = coords.residues()(static_cast<Index>(t - 1));

    std::vector<Share> shares;
    shares.reserve(n);
    while (shares.size() < n) {
      const std::size_t index = shares.size() + 1;
      bool placed = false;
      for (std::size_t d = 0; d < options.max_draws_per_share && !placed; ++d) {
        ++draws;
        std::vector<Residue> coeffs(t - 1);
        Residue constant = last;
        for (std::size_t j = 0; j + 1 < t; ++j) {
          coeffs[j] = sample_uniform(rng, m).value();
          const Residue term =
              mod_mul(coeffs[j], coords.residues()(static_cast<Index>(j)), m);
          constant = mod_sub(constant, term, m);
        }
        Share candidate(index, std::move(coeffs), constant, params);
        if (extends_admissibly(shares, candidate)) {
          shares.push_back(std::move(candidate));
          placed = true;
        }
      }
      if (!placed) break;
    }
    if (shares.size() == n) {
      return {SecretPoint(std::move(coords), params), std::move(shares), attempt,
              draws};
    }
  }
  throw Error(ErrorCode::AdmissibilityExhausted,
              "no admissible share set after " +
                  std::to_string(options.max_attempts) +
                  " attempts; p is too small for this (t, n)");
}

std::vector<Share> split(const FieldElement& secret, const SchemeParams& params,
                         RandomSource& rng, const SplitOptions& options) {
  return deal(secret, params, rng, options).shares;
}

ModMatrix normal_matrix(std::span<const Share> shares) {
  if (shares.empty()) throw Error(ErrorCode::WrongShareCount, "no shares");
  const SchemeParams& params = common_params(shares);
  const PrimeModulus m = params.modulus();
  const Index cols = static_cast<Index>(params.threshold());
  DenseMatrix<Residue> rows(static_cast<Index>(shares.size()), cols);
  for (std::size_t i = 0; i < shares.size(); ++i) {
    rows.row(static_cast<Index>(i)) = shares[i].normal().residues().transpose();
  }
  return {m, std::move(rows)};
}

bool subset_nonsingular(std::span<const Share> subset) {
  return !determinant(normal_matrix(subset)).is_zero();
}

bool subset_hides_secret(std::span<const Share> subset) {
  if (subset.empty()) return true;
  const ModMatrix normals = normal_matrix(subset);
  ModVector e1(normals.modulus(), normals.cols());
  e1.set(0, FieldElement::one(normals.modulus()));
  return !in_rowspace(e1, normals);
}

bool admissible(std::span<const Share> shares) {
  if (shares.empty()) return true;
  const SchemeParams& params = common_params(shares);
  require_distinct_indices(shares);
  const std::size_t t = params.threshold();
  const std::size_t count = shares.size();

  bool ok = true;
  for_each_subset(count, t, [&](std::span<const std::size_t> picks) {
    ok = subset_nonsingular(gather(shares, picks));
    return ok;
  });
  if (!ok) return false;

  // A subset whose row space misses e_1 cannot have a sub-subset that hits
  // it, so only the largest below-threshold subsets need checking.
  const std::size_t below = std::min(t - 1, count);
  for_each_subset(count, below, [&](std::span<const std::size_t> picks) {
    ok = subset_hides_secret(gather(shares, picks));
    return ok;
  });
  return ok;
}

SecretPoint reconstruct_point(std::span<const Share> shares) {
  if (shares.empty()) throw Error(ErrorCode::WrongShareCount, "no shares");
  const SchemeParams& params = common_params(shares);
  if (shares.size() != params.threshold()) {
    throw Error(ErrorCode::WrongShareCount,
                "need exactly " + std::to_string(params.threshold()) +
                    " shares, got " + std::to_string(shares.size()));
  }
  require_distinct_indices(shares);
  const PrimeModulus m = params.modulus();
  const ModMatrix a = normal_matrix(shares);
  DenseVector<Residue> b(a.rows());
  for (std::size_t i = 0; i < shares.size(); ++i) {
    b(static_cast<Index>(i)) = mod_neg(shares[i].constant, m);
  }
  try {
    return {solve(a, ModVector(m, std::move(b))), params};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularShares,
                "hyperplanes do not meet in a single point");
  }
}

FieldElement reconstruct(std::span<const Share> shares) {
  return reconstruct_point(shares).secret();
}

bool verify_share(const Share& share, const SecretPoint& point) {
  if (!(share.params == point.params())) {
    throw Error(ErrorCode::MixedParams, "share and point from different schemes");
  }
  const PrimeModulus m = share.params.modulus();
  const auto& x = point.coords().residues();
  Residue rhs = share.constant;
  for (std::size_t j = 0; j < share.coeffs.size(); ++j) {
    rhs = mod_add(rhs, mod_mul(share.coeffs[j], x(static_cast<Index>(j)), m), m);
  }
  return rhs == x(x.size() - 1);
}

}  // namespace blakley
