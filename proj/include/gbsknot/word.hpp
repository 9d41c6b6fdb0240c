#pragma once

#include "gbsknot/integer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gbsknot {

/// A power of one generator.
struct Syllable {
  std::string generator;
  Integer exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Group word in exponent-run form. Always freely reduced: no zero
/// exponents and no two adjacent syllables on the same generator.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Syllable>& syllables);

  static Word letter(std::string generator, Integer exponent = 1);

  /// Whitespace-separated factors `name^exp`, `^1` optional; the lone token
  /// `1` denotes the identity. Throws ParseError with a column (line 1).
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  /// Appends generator^exponent and freely reduces at the join.
  void append(const std::string& generator, const Integer& exponent);

  Word inverse() const;
  Word power(const Integer& n) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// "t^-1 a^2 t"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);

}  // namespace gbsknot
