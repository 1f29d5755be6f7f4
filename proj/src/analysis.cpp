#include "blakley/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <vector>

namespace blakley {

namespace {

// p^t, or 0 if that exceeds `cap`.
std::uint64_t bounded_power(std::uint64_t p, std::size_t t, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (total > cap / p) return 0;
    total *= p;
  }
  return total;
}

}  // namespace

LeakageReport candidate_secrets(const SchemeParams& params,
                                std::span<const Share> shares,
                                const EnumerationLimits& limits) {
  const std::size_t t = params.threshold();
  const PrimeModulus m = params.modulus();
  const std::uint64_t p = m.value();
  if (shares.size() >= t) {
    throw Error(ErrorCode::SharesNotBelowThreshold,
                std::to_string(shares.size()) + " shares reach threshold " +
                    std::to_string(t));
  }
  std::vector<std::size_t> indices;
  for (const Share& s : shares) {
    if (!(s.params == params)) {
      throw Error(ErrorCode::MixedParams, "share does not belong to this scheme");
    }
    indices.push_back(s.index);
  }
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw Error(ErrorCode::DuplicateShareIndex, "share index repeated");
  }
  if (bounded_power(p, t, limits.max_points) == 0) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "p^t exceeds " + std::to_string(limits.max_points) + " points");
  }

  // Tally by first coordinate. The prefix (x_1 .. x_{t-1}) is an odometer;
  // for each prefix every plane's right-hand side is computed once and the
  // last coordinate is then scanned over all of GF(p).
  std::vector<std::uint64_t> tally(p, 0);
  std::vector<Residue> prefix(t - 1, 0);
  std::vector<Residue> rhs(shares.size());
  for (;;) {
    for (std::size_t s = 0; s < shares.size(); ++s) {
      Residue acc = shares[s].constant;
      for (std::size_t j = 0; j + 1 < t; ++j) {
        acc = mod_add(acc, mod_mul(shares[s].coeffs[j], prefix[j], m), m);
      }
      rhs[s] = acc;
    }
    for (Residue last = 0; last < p; ++last) {
      const bool on_all = std::all_of(rhs.begin(), rhs.end(),
                                      [last](Residue r) { return r == last; });
      if (on_all) ++tally[prefix[0]];
    }
    std::size_t j = 0;
    while (j < prefix.size() && ++prefix[j] == p) prefix[j++] = 0;
    if (j == prefix.size()) break;
  }

  LeakageReport report;
  report.modulus = p;
  report.shares_used = shares.size();
  report.max_bits = std::log2(static_cast<double>(p));
  for (Residue v = 0; v < p; ++v) {
    if (tally[v] == 0) continue;
    report.candidate_counts.emplace(v, tally[v]);
    report.consistent_points += tally[v];
  }
  if (report.consistent_points != 0) {
    const double total = static_cast<double>(report.consistent_points);
    for (const auto& [value, count] : report.candidate_counts) {
      const double q = static_cast<double>(count) / total;
      report.entropy_bits -= q * std::log2(q);
    }
  }
  report.pinned = report.candidate_counts.size() == 1;
  if (report.pinned) report.entropy_bits = 0.0;
  return report;
}

void write_text(std::ostream& os, const LeakageReport& report) {
  std::size_t width = 5;
  for (const auto& [value, count] : report.candidate_counts) {
    width = std::max(width, std::to_string(value).size());
  }
  os << std::left << std::setw(static_cast<int>(width)) << "value"
     << "  count\n";
  for (const auto& [value, count] : report.candidate_counts) {
    os << std::left << std::setw(static_cast<int>(width)) << value << "  "
       << count << '\n';
  }
  os << std::right;
  os << "shares:     " << report.shares_used << '\n'
     << "points:     " << report.consistent_points << '\n'
     << "candidates: " << report.candidate_counts.size() << " of "
     << report.modulus << '\n'
     << std::fixed << std::setprecision(6)
     << "entropy:    " << report.entropy_bits << " bits (max "
     << report.max_bits << ")\n"
     << std::defaultfloat
     << "pinned:     " << (report.pinned ? "true" : "false") << '\n';
}

void write_csv(std::ostream& os, const LeakageReport& report) {
  os << "value,count\n";
  for (const auto& [value, count] : report.candidate_counts) {
    os << value << ',' << count << '\n';
  }
}

ThresholdSummary corruption_thresholds(std::size_t threshold,
                                       std::size_t shareholders) {
  if (threshold < 1 || threshold > shareholders) {
    throw Error(ErrorCode::InvalidParams, "need 1 <= t <= n");
  }
  return {threshold, shareholders - threshold + 1,
          "at fixed t, availability rises with n: any " +
              std::to_string(threshold) + " of " + std::to_string(shareholders) +
              " shareholders can recover the secret"};
}

ThresholdSummary corruption_thresholds(const SchemeParams& params) {
  return corruption_thresholds(params.threshold(), params.shareholders());
}

double share_space_overhead(const SchemeParams& params) {
  // t - 1 coefficients plus a constant, each one residue wide, against a
  // one-residue secret.
  const double residue_bits = params.modulus().residue_bits();
  return static_cast<double>(params.threshold()) * residue_bits / residue_bits;
}

}  // namespace blakley
