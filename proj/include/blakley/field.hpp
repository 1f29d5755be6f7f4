#ifndef BLAKLEY_FIELD_HPP
#define BLAKLEY_FIELD_HPP

#include <cstdint>
#include <iosfwd>

#include "blakley/error.hpp"

namespace blakley {

/// Canonical representative of a residue class, always in [0, p).
using Residue = std::uint64_t;

/// Exclusive upper bound on supported moduli. Two reduced residues multiply
/// into an unsigned 128-bit intermediate without overflow.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

__extension__ typedef unsigned __int128 WideProduct;

/// Exact for every 64-bit input (deterministic Miller-Rabin).
bool is_prime(std::uint64_t n) noexcept;

/// The public prime p. Construction throws NonPrimeModulus for composites
/// (and 0, 1) and InvalidParams for p >= 2^62.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  /// Number of bits needed to write p - 1 (at least 1).
  unsigned residue_bits() const noexcept;

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

// Raw residue arithmetic. Inputs must already be canonical.
inline Residue mod_add(Residue a, Residue b, PrimeModulus m) noexcept {
  const Residue s = a + b;  // < 2^63, no wrap
  return s >= m.value() ? s - m.value() : s;
}
inline Residue mod_sub(Residue a, Residue b, PrimeModulus m) noexcept {
  return a >= b ? a - b : a + m.value() - b;
}
inline Residue mod_neg(Residue a, PrimeModulus m) noexcept {
  return a == 0 ? 0 : m.value() - a;
}
inline Residue mod_mul(Residue a, Residue b, PrimeModulus m) noexcept {
  return static_cast<Residue>(static_cast<WideProduct>(a) * b % m.value());
}
/// Throws ZeroInverse when a == 0.
Residue mod_inv(Residue a, PrimeModulus m);
Residue mod_pow(Residue base, std::uint64_t exp, PrimeModulus m) noexcept;
/// Reduces any signed integer to its canonical residue.
Residue mod_reduce(std::int64_t v, PrimeModulus m) noexcept;

/// An element of GF(p), tagged with its modulus. Binary operations between
/// elements of different fields throw ModulusMismatch.
class FieldElement {
 public:
  /// Throws RangeViolation if value >= p.
  FieldElement(Residue value, PrimeModulus modulus);

  static FieldElement zero(PrimeModulus m) { return {0, m}; }
  static FieldElement one(PrimeModulus m) { return {1, m}; }
  static FieldElement from_signed(std::int64_t v, PrimeModulus m) {
    return {mod_reduce(v, m), m};
  }

  Residue value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const { return {mod_neg(value_, modulus_), modulus_}; }
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Residue value_;
  PrimeModulus modulus_;
};

/// Multiplicative inverse by extended Euclid. Throws ZeroInverse for 0.
FieldElement inv(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace blakley

#endif  // BLAKLEY_FIELD_HPP
