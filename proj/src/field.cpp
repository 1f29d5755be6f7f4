#include "blakley/field.hpp"

#include <array>
#include <bit>
#include <ostream>
#include <string>

#include "blakley/random.hpp"

namespace blakley {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<WideProduct>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp != 0) {
    if (exp & 1U) result = mulmod64(result, base, n);
    base = mulmod64(base, base, n);
    exp >>= 1U;
  }
  return result;
}

// Witnesses {2..37} are sufficient for every n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = powmod64(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorCode::InvalidParams,
                "modulus " + std::to_string(p) + " exceeds 2^62");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  }
}

unsigned PrimeModulus::residue_bits() const noexcept {
  const auto width = static_cast<unsigned>(std::bit_width(p_ - 1));
  return width == 0 ? 1 : width;
}

Residue mod_inv(Residue a, PrimeModulus m) {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
  // Invariant: old_s * a == old_r (mod p). Magnitudes stay below p < 2^62.
  std::int64_t old_r = static_cast<std::int64_t>(a);
  std::int64_t r = static_cast<std::int64_t>(m.value());
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return mod_reduce(old_s, m);
}

Residue mod_pow(Residue base, std::uint64_t exp, PrimeModulus m) noexcept {
  return powmod64(base, exp, m.value());
}

Residue mod_reduce(std::int64_t v, PrimeModulus m) noexcept {
  const auto p = static_cast<std::int64_t>(m.value());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

FieldElement::FieldElement(Residue value, PrimeModulus modulus)
    : value_(value), modulus_(modulus) {
  if (value >= modulus.value()) {
    throw Error(ErrorCode::RangeViolation,
                std::to_string(value) + " is not reduced mod " +
                    std::to_string(modulus.value()));
  }
}

namespace {
void require_same(PrimeModulus a, PrimeModulus b) {
  if (a != b) {
    throw Error(ErrorCode::ModulusMismatch,
                "mod " + std::to_string(a.value()) + " vs mod " +
                    std::to_string(b.value()));
  }
}
}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same(modulus_, rhs.modulus_);
  value_ = mod_add(value_, rhs.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same(modulus_, rhs.modulus_);
  value_ = mod_sub(value_, rhs.value_, modulus_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same(modulus_, rhs.modulus_);
  value_ = mod_mul(value_, rhs.value_, modulus_);
  return *this;
}

FieldElement inv(const FieldElement& a) {
  return {mod_inv(a.value(), a.modulus()), a.modulus()};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.modulus().value() << ')';
}

std::uint64_t EntropyRandom::next_word() {
  static_assert(sizeof(std::random_device::result_type) == 4);
  const std::uint64_t hi = device_();
  const std::uint64_t lo = device_();
  return (hi << 32U) | lo;
}

FieldElement sample_uniform(RandomSource& rng, PrimeModulus p) {
  const unsigned bits = p.residue_bits();
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t candidate = rng.next_word() & mask;
    if (candidate < p.value()) return {candidate, p};
  }
}

}  // namespace blakley
