#include "blakley/share_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace blakley {

namespace {

constexpr std::string_view kMagic = "BLK1";

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedField, what);
}

std::uint64_t parse_decimal(std::string_view digits, std::string_view field) {
  const std::string name(field);
  if (digits.empty()) malformed("empty value for " + name);
  for (char ch : digits) {
    if (ch < '0' || ch > '9') malformed("non-digit in " + name);
  }
  if (digits.size() > 1 && digits.front() == '0') {
    malformed("leading zero in " + name);
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorCode::RangeViolation, name + " does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    malformed("bad number in " + name);
  }
  return value;
}

// Consumes `key=` followed by everything up to the next space (or the end
// for the final field).
std::string_view take_field(std::string_view& rest, std::string_view key,
                            bool last) {
  const std::string prefix = std::string(key) + "=";
  if (rest.substr(0, prefix.size()) != prefix) {
    malformed("expected field '" + std::string(key) + "'");
  }
  rest.remove_prefix(prefix.size());
  const std::size_t space = rest.find(' ');
  if (last) {
    if (space != std::string_view::npos) malformed("trailing data after c");
    const std::string_view value = rest;
    rest = {};
    return value;
  }
  if (space == std::string_view::npos) malformed("record ends after " + std::string(key));
  const std::string_view value = rest.substr(0, space);
  rest.remove_prefix(space + 1);
  return value;
}

}  // namespace

std::string encode_share(const Share& share) {
  const SchemeParams& params = share.params;
  std::string out(kMagic);
  out += " p=" + std::to_string(params.modulus().value());
  out += " t=" + std::to_string(params.threshold());
  out += " n=" + std::to_string(params.shareholders());
  out += " i=" + std::to_string(share.index);
  out += " a=";
  for (std::size_t j = 0; j < share.coeffs.size(); ++j) {
    if (j != 0) out += ',';
    out += std::to_string(share.coeffs[j]);
  }
  out += " c=" + std::to_string(share.constant);
  out += '\n';
  return out;
}

Share decode_share(std::string_view record) {
  if (!record.empty() && record.back() == '\n') record.remove_suffix(1);

  if (record.substr(0, kMagic.size()) != kMagic ||
      (record.size() > kMagic.size() && record[kMagic.size()] != ' ')) {
    throw Error(ErrorCode::BadMagic, "record does not start with BLK1");
  }
  std::string_view rest = record.substr(kMagic.size());
  if (rest.empty()) malformed("record has no fields");
  rest.remove_prefix(1);

  const std::uint64_t p = parse_decimal(take_field(rest, "p", false), "p");
  const std::uint64_t t = parse_decimal(take_field(rest, "t", false), "t");
  const std::uint64_t n = parse_decimal(take_field(rest, "n", false), "n");
  const std::uint64_t i = parse_decimal(take_field(rest, "i", false), "i");
  const std::string_view coeff_list = take_field(rest, "a", false);
  const std::uint64_t c = parse_decimal(take_field(rest, "c", true), "c");

  std::vector<std::uint64_t> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = coeff_list.find(',', start);
    coeffs.push_back(parse_decimal(coeff_list.substr(start, comma - start), "a"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }

  if (p >= kMaxModulus) {
    throw Error(ErrorCode::RangeViolation, "p must be below 2^62");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  }
  if (t < 2 || t > n || n > kMaxShareholders) {
    throw Error(ErrorCode::RangeViolation, "need 2 <= t <= n <= 64");
  }
  if (i < 1 || i > n) {
    throw Error(ErrorCode::RangeViolation, "index outside 1..n");
  }
  if (coeffs.size() + 1 != t) {
    malformed("expected " + std::to_string(t - 1) + " coefficients, got " +
              std::to_string(coeffs.size()));
  }
  if (c >= p) throw Error(ErrorCode::RangeViolation, "c not reduced mod p");
  for (std::uint64_t a : coeffs) {
    if (a >= p) throw Error(ErrorCode::RangeViolation, "coefficient not reduced mod p");
  }

  const SchemeParams params(PrimeModulus(p), static_cast<std::size_t>(t),
                            static_cast<std::size_t>(n));
  return {static_cast<std::size_t>(i), {coeffs.begin(), coeffs.end()}, c, params};
}

}  // namespace blakley
