#ifndef BLAKLEY_ANALYSIS_HPP
#define BLAKLEY_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "blakley/scheme.hpp"

namespace blakley {

/// Posterior over the secret coordinate given a set of sub-threshold shares,
/// measured by exhaustive enumeration of GF(p)^t.
struct LeakageReport {
  std::uint64_t modulus = 0;
  std::size_t shares_used = 0;
  /// Secret value -> number of points on every given hyperplane having that
  /// first coordinate. Values with zero consistent points are omitted.
  std::map<Residue, std::uint64_t> candidate_counts;
  std::uint64_t consistent_points = 0;
  double entropy_bits = 0.0;  // Shannon entropy of the normalised tally
  double max_bits = 0.0;      // log2 p
  bool pinned = false;        // exactly one candidate secret
};

struct EnumerationLimits {
  std::uint64_t max_points = 10'000'000;
};

/// Throws SharesNotBelowThreshold (k >= t), EnumerationTooLarge (p^t above
/// the limit), MixedParams or DuplicateShareIndex.
LeakageReport candidate_secrets(const SchemeParams& params,
                                std::span<const Share> shares,
                                const EnumerationLimits& limits = {});

/// Aligned text table: one row per candidate, then entropy and pinned flag.
void write_text(std::ostream& os, const LeakageReport& report);
/// Header `value,count`, then one line per candidate in increasing order.
void write_csv(std::ostream& os, const LeakageReport& report);

struct ThresholdSummary {
  std::size_t secrecy_corruptions;    // shareholders to corrupt to learn S
  std::size_t integrity_corruptions;  // shareholders to corrupt to destroy S
  std::string availability_note;
};

/// Accepts any 1 <= t <= n, including degenerate schemes that SchemeParams
/// rejects; throws InvalidParams otherwise.
ThresholdSummary corruption_thresholds(std::size_t threshold,
                                       std::size_t shareholders);
ThresholdSummary corruption_thresholds(const SchemeParams& params);

/// Bits stored per share divided by bits of the secret.
double share_space_overhead(const SchemeParams& params);

}  // namespace blakley

#endif  // BLAKLEY_ANALYSIS_HPP
