#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/rational.hpp"

namespace cuntz {

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

struct LetterOutOfRange : std::runtime_error {
  std::size_t position;
  LetterOutOfRange(std::size_t pos, int letter, int n)
      : std::runtime_error("letter " + std::to_string(letter) + " at " + std::to_string(pos) +
                           " exceeds alphabet size " + std::to_string(n)),
        position(pos) {}
};

struct ParsedExpression {
  AlgebraElement element;
  // Input text range of each parsed term, in term order.
  std::vector<std::pair<std::size_t, std::size_t>> source_span_map;
};

namespace detail {

// Grammar (whitespace-insensitive):
//   element  := ['+'|'-'] term (('+'|'-') term)*
//   term     := [coeff ['*']] word
//   word     := 'I' | 'S' wordspec ['*'] { 'S' wordspec ['*'] }
//   wordspec := '[' digits (',' digits)* ']'
//   coeff    := rational [('+'|'-') rational 'i']
// Adjacent generator groups multiply; a starred group is the adjoint of
// the word it carries.
class ElementParser {
 public:
  ElementParser(std::string_view text, int n) : text_(text), n_(n) {}

  ParsedExpression parse() {
    std::vector<std::pair<Cylinder, ComplexQ>> raw;
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    for (;;) {
      skip_ws();
      std::size_t start = pos_;
      auto [cyl, coeff] = parse_term();
      if (negative) coeff = -coeff;
      if (cyl && !coeff.is_zero()) raw.emplace_back(*cyl, coeff);
      spans.emplace_back(start, pos_);
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = take();
      if (c != '+' && c != '-') throw SyntaxError(pos_ - 1, "expected '+' or '-' between terms");
      negative = c == '-';
    }
    return ParsedExpression{AlgebraElement::from_terms(n_, std::move(raw)), std::move(spans)};
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool digit_ahead() const { return peek() >= '0' && peek() <= '9'; }

  BigInt parse_integer() {
    std::size_t start = pos_;
    while (digit_ahead()) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, "expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_rational_token() {
    BigInt num = parse_integer();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      std::size_t dpos = pos_;
      BigInt den = parse_integer();
      if (den == 0) throw SyntaxError(dpos, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // rational [('+'|'-') rational 'i'].  The sign is consumed only when a
  // well-formed imaginary part follows; otherwise it separates terms.
  ComplexQ parse_coeff() {
    Rational re = parse_rational_token();
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      std::size_t mark = pos_;
      bool neg = take() == '-';
      skip_ws();
      if (digit_ahead()) {
        Rational im = parse_rational_token();
        skip_ws();
        if (peek() == 'i') {
          take();
          return ComplexQ(std::move(re), neg ? Rational(-im) : im);
        }
      }
      pos_ = mark;
    } else if (peek() == 'i') {
      // Bare imaginary marker directly after the rational: "2i".
      take();
      return ComplexQ(Rational(0), std::move(re));
    }
    return ComplexQ(std::move(re));
  }

  Word parse_wordspec() {
    skip_ws();
    if (take() != '[') throw SyntaxError(pos_ - 1, "expected '[' after S");
    std::vector<int> letters;
    for (;;) {
      skip_ws();
      std::size_t dpos = pos_;
      BigInt v = parse_integer();
      if (v < 1 || v > n_) throw LetterOutOfRange(dpos, static_cast<int>(v), n_);
      letters.push_back(static_cast<int>(v));
      skip_ws();
      char c = take();
      if (c == ',') continue;
      if (c == ']') break;
      throw SyntaxError(pos_ - 1, "expected ',' or ']' in word");
    }
    return Word(std::move(letters));
  }

  // Returns the term's cylinder (nothing when generator groups multiply
  // to zero) and its coefficient.
  std::pair<std::optional<Cylinder>, ComplexQ> parse_term() {
    skip_ws();
    ComplexQ coeff(1);
    if (digit_ahead()) {
      coeff = parse_coeff();
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
      }
    }
    if (peek() == 'I') {
      take();
      return {Cylinder{Word{}, Word{}}, coeff};
    }
    if (peek() != 'S') throw SyntaxError(pos_, "expected 'I' or 'S'");
    std::optional<Cylinder> acc = Cylinder{Word{}, Word{}};
    while (peek() == 'S') {
      take();
      bool starred = false;
      if (peek() == '*') {
        take();
        starred = true;
      }
      Word w = parse_wordspec();
      Cylinder group = starred ? Cylinder{Word{}, std::move(w)} : Cylinder{std::move(w), Word{}};
      if (acc) acc = word_product(*acc, group);
      skip_ws();
    }
    return {acc, coeff};
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedExpression parse_algebra_element(std::string_view text, int n) {
  return detail::ElementParser(text, n).parse();
}

// Grammar-compatible rendering of a canonical element; parsing the output
// returns an equal element.
inline std::string algebra_element_to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0 I";
  std::string out;
  bool first = true;
  for (const auto& [c, v] : a.terms()) {
    bool negative = v.re < 0 || (v.re == 0 && v.im < 0);
    ComplexQ shown = negative ? -v : v;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(shown == ComplexQ(1))) {
      if (shown.re == 0 && shown.im > 0)
        out += rational_to_string(shown.im) + "i";
      else
        out += complexq_to_string(shown);
      out += " ";
    }
    if (c.alpha.empty() && c.beta.empty()) {
      out += "I";
    } else {
      if (!c.alpha.empty()) out += "S" + word_to_string(c.alpha);
      if (!c.beta.empty()) out += "S*" + word_to_string(c.beta);
    }
  }
  return out;
}

}  // namespace cuntz
