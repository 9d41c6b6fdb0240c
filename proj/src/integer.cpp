#include "gbsknot/integer.hpp"

#include "gbsknot/error.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace gbsknot {

std::string to_string(const Integer& value) { return value.str(); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  // Invariant: r0 = a*s0 + b*t0 and r1 = a*s1 + b*t1.
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

bool fits_int64(const Integer& value) {
  return value >= std::numeric_limits<long long>::min() &&
         value <= std::numeric_limits<long long>::max();
}

}  // namespace gbsknot
