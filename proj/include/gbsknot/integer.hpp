#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gbsknot {

/// Arbitrary-precision signed integer used for every label, exponent and
/// matrix entry. Products of labels overflow fixed-width types quickly.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

/// Parses an optionally signed decimal literal. Returns nullopt on any
/// malformed input (empty, stray characters, lone sign).
std::optional<Integer> parse_integer(std::string_view text);

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);

/// Solution of a*x + b*y = g with g = gcd(a, b) >= 0.
struct Bezout {
  Integer g;
  Integer x;
  Integer y;
};

/// Extended Euclid. For a, b not both zero the coefficients are the ones
/// produced by the remainder sequence, so |x| <= |b|/g and |y| <= |a|/g.
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Whether value fits into a signed 64-bit integer.
bool fits_int64(const Integer& value);

}  // namespace gbsknot
