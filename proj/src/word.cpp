#include "gbsknot/word.hpp"

#include "gbsknot/error.hpp"
#include "gbsknot/graph.hpp"

#include <cctype>

namespace gbsknot {

Word::Word(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) append(s.generator, s.exponent);
}

Word Word::letter(std::string generator, Integer exponent) {
  Word w;
  w.append(generator, exponent);
  return w;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);
    const std::size_t column = start + 1;
    if (token == "1") continue;
    const std::size_t caret = token.find('^');
    const std::string_view name = token.substr(0, caret);
    if (!is_valid_id(name)) {
      throw ParseError(ErrorCode::Parse, 1, column,
                       "expected a generator name, found '" + std::string(token) + "'");
    }
    Integer exponent = 1;
    if (caret != std::string_view::npos) {
      auto parsed = parse_integer(token.substr(caret + 1));
      if (!parsed) {
        throw ParseError(ErrorCode::Parse, 1, column + caret + 1,
                         "bad exponent in '" + std::string(token) + "'");
      }
      exponent = *parsed;
    }
    w.append(std::string(name), exponent);
  }
  return w;
}

void Word::append(const std::string& generator, const Integer& exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == generator) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({generator, exponent});
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->generator, -it->exponent});
  }
  return w;
}

Word Word::power(const Integer& n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word w;
  for (Integer i = abs(n); i > 0; --i) w *= base;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& s : rhs.syllables_) append(s.generator, s.exponent);
  return *this;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) out += "^" + gbsknot::to_string(s.exponent);
  }
  return out;
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

}  // namespace gbsknot
