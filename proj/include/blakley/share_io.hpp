#ifndef BLAKLEY_SHARE_IO_HPP
#define BLAKLEY_SHARE_IO_HPP

#include <string>
#include <string_view>

#include "blakley/scheme.hpp"

namespace blakley {

/// One share as a single canonical line:
///
///   BLK1 p=<p> t=<t> n=<n> i=<index> a=<a_1>,...,<a_{t-1}> c=<c>\n
///
/// Decimal fields, no leading zeros, no whitespace other than the single
/// spaces shown.
std::string encode_share(const Share& share);

/// Strict inverse of encode_share. The trailing linefeed is optional.
/// Throws BadMagic, MalformedField, RangeViolation or NonPrimeModulus.
Share decode_share(std::string_view record);

}  // namespace blakley

#endif  // BLAKLEY_SHARE_IO_HPP
