#ifndef BLAKLEY_TESTS_SUPPORT_HPP
#define BLAKLEY_TESTS_SUPPORT_HPP

#include <array>
#include <vector>

#include <gtest/gtest.h>

#include "blakley/scheme.hpp"

namespace blakley::testing {

/// The worked five-plane example over GF(73): z = a x + b y + c, all meeting
/// at (42, 29, 57).
inline const std::array<std::array<Residue, 3>, 5> kExamplePlanes = {{
    {4, 19, 68},
    {52, 27, 10},
    {36, 65, 18},
    {57, 12, 16},
    {34, 19, 49},
}};

inline SchemeParams example_params() { return {PrimeModulus(73), 3, 5}; }

inline std::vector<Share> example_shares() {
  std::vector<Share> shares;
  for (std::size_t i = 0; i < kExamplePlanes.size(); ++i) {
    const auto& pl = kExamplePlanes[i];
    shares.emplace_back(i + 1, std::vector<Residue>{pl[0], pl[1]}, pl[2],
                        example_params());
  }
  return shares;
}

/// Shares picked by 1-based index.
inline std::vector<Share> pick(const std::vector<Share>& all,
                               std::initializer_list<std::size_t> indices) {
  std::vector<Share> out;
  for (std::size_t i : indices) out.push_back(all.at(i - 1));
  return out;
}

}  // namespace blakley::testing

#define EXPECT_BLAKLEY_ERROR(stmt, expected_code)                         \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "expected " << ::blakley::to_string(expected_code); \
    } catch (const ::blakley::Error& e) {                                 \
      EXPECT_EQ(e.code(), expected_code) << e.what();                     \
    }                                                                     \
  } while (false)

#endif  // BLAKLEY_TESTS_SUPPORT_HPP
