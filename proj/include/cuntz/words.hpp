#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuntz/rational.hpp"

namespace cuntz {

struct EmptyPeriod : std::invalid_argument {
  EmptyPeriod() : std::invalid_argument("point period must be nonempty") {}
};

// Alphabet {1,...,n}.  All letters of all words and points range over it.
struct Alphabet {
  int n;

  explicit Alphabet(int size) : n(size) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
  }
};

enum class Ordering { LT, EQ, GT };

// A finite (possibly empty) string of letters.  Letters are 1-based
// values; validation against a concrete alphabet happens at the I/O
// boundaries, which are the only places an out-of-range letter can enter.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int a : letters_)
      if (a < 1) throw std::invalid_argument("word letters must be >= 1");
  }
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_.at(i - 1); }  // 1-based
  const std::vector<int>& letters() const { return letters_; }

  int back() const { return letters_.back(); }

  Word concat(const Word& o) const {
    std::vector<int> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(v));
  }
  Word append(int a) const {
    std::vector<int> v = letters_;
    v.push_back(a);
    return Word(std::move(v));
  }
  // Letters from position `from` (1-based) through `to` inclusive.
  Word subword(std::size_t from, std::size_t to) const {
    if (from > to + 1 || to > length()) throw std::out_of_range("subword");
    return Word(std::vector<int>(letters_.begin() + (from - 1), letters_.begin() + to));
  }
  Word prefix(std::size_t len) const { return subword(1, len); }
  Word drop_front(std::size_t k) const { return subword(k + 1, length()); }
  Word drop_back() const { return subword(1, length() - 1); }

  bool is_prefix_of(const Word& o) const {
    return length() <= o.length() &&
           std::equal(letters_.begin(), letters_.end(), o.letters_.begin());
  }

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex; a deterministic total order used for canonical term maps.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

// True lexicographic order on finite words (a proper prefix precedes its
// extensions).  All order-theoretic uses in the library compare words of
// equal length or prefixes of points, where this is the order meant.
inline Ordering lex_compare(const Word& a, const Word& b) {
  std::size_t m = std::min(a.length(), b.length());
  for (std::size_t i = 1; i <= m; ++i) {
    if (a.letter(i) != b.letter(i)) return a.letter(i) < b.letter(i) ? Ordering::LT : Ordering::GT;
  }
  if (a.length() == b.length()) return Ordering::EQ;
  return a.length() < b.length() ? Ordering::LT : Ordering::GT;
}

// Compares equal-length words at their *last* differing letter.  This is
// the order underlying the standard UHF embedding, where the final letter
// is the most significant digit.
inline Ordering rev_lex_compare(const Word& a, const Word& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("rev_lex_compare: words must have equal length");
  for (std::size_t i = a.length(); i >= 1; --i) {
    if (a.letter(i) != b.letter(i)) return a.letter(i) < b.letter(i) ? Ordering::LT : Ordering::GT;
  }
  return Ordering::EQ;
}

inline std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(w.letter(i));
  }
  return s + "]";
}

// An eventually periodic element of X = {1,...,n}^infinity, stored as
// preperiod.period.period...  Instances are always in canonical form:
// the period is primitive and the preperiod is as short as possible, so
// two Points denote the same sequence iff they compare equal.
class Point {
 public:
  Point(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {
    if (per_.empty()) throw EmptyPeriod();
    canonicalize();
  }

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  // 1-based letter access into the infinite sequence.
  int letter(std::size_t j) const {
    if (j == 0) throw std::out_of_range("point letters are 1-based");
    if (j <= pre_.length()) return pre_.letter(j);
    return per_.letter((j - pre_.length() - 1) % per_.length() + 1);
  }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

 private:
  void canonicalize() {
    // Primitive root of the period.
    for (std::size_t d = 1; d < per_.length(); ++d) {
      if (per_.length() % d != 0) continue;
      bool rep = true;
      for (std::size_t i = 1; i <= per_.length() && rep; ++i)
        if (per_.letter(i) != per_.letter((i - 1) % d + 1)) rep = false;
      if (rep) {
        per_ = per_.prefix(d);
        break;
      }
    }
    // Absorb trailing preperiod letters into a rotated period.  The denoted
    // sequence is unchanged at every step and the preperiod strictly
    // shrinks, so this terminates.
    while (!pre_.empty() && pre_.back() == per_.back()) {
      std::vector<int> rot;
      rot.push_back(per_.back());
      for (std::size_t i = 1; i + 1 <= per_.length(); ++i) rot.push_back(per_.letter(i));
      per_ = Word(std::move(rot));
      pre_ = pre_.drop_back();
    }
  }

  Word pre_;
  Word per_;
};

inline Point canonical_point(const Word& pre, const Word& per) { return Point(pre, per); }

// The constant sequence a.a.a...
inline Point constant_point(int a) { return Point(Word{}, Word{a}); }

// S^j applied to x: drop the first j letters.
inline Point shift(const Point& x, std::size_t j) {
  const std::size_t p = x.preperiod().length();
  if (j <= p) return Point(x.preperiod().drop_front(j), x.period());
  std::size_t r = (j - p) % x.period().length();
  if (r == 0) return Point(Word{}, x.period());
  // Rotate the period left by r.
  return Point(Word{}, x.period().drop_front(r).concat(x.period().prefix(r)));
}

inline Point prepend(const Word& alpha, const Point& x) {
  return Point(alpha.concat(x.preperiod()), x.period());
}

// Past this index, two sequences that have agreed so far agree forever.
inline std::size_t first_difference_bound(const Point& x, const Point& y) {
  std::size_t l = std::lcm(x.period().length(), y.period().length());
  return x.preperiod().length() + y.preperiod().length() + 2 * l;
}

// Index of the first differing letter, or nothing when the sequences are
// equal.
inline std::optional<std::size_t> first_difference(const Point& x, const Point& y) {
  if (x == y) return std::nullopt;
  std::size_t bound = first_difference_bound(x, y);
  for (std::size_t j = 1; j <= bound; ++j)
    if (x.letter(j) != y.letter(j)) return j;
  throw std::logic_error("first_difference: distinct canonical points agree past the scan bound");
}

inline Ordering lex_compare(const Point& x, const Point& y) {
  auto j = first_difference(x, y);
  if (!j) return Ordering::EQ;
  return x.letter(*j) < y.letter(*j) ? Ordering::LT : Ordering::GT;
}

inline bool is_prefix_of(const Word& w, const Point& x) {
  for (std::size_t i = 1; i <= w.length(); ++i)
    if (w.letter(i) != x.letter(i)) return false;
  return true;
}

inline std::string point_to_string(const Point& x) {
  return word_to_string(x.preperiod()) + ":" + word_to_string(x.period());
}

// Exact subinterval of [0,1] indexed by a word: the range interval of
// the partial isometry S_alpha in the interval picture.
struct IntervalQ {
  Rational lo;
  Rational hi;

  friend bool operator==(const IntervalQ&, const IntervalQ&) = default;
};

inline IntervalQ word_interval(const Word& alpha, int n) {
  Rational lo = 0;
  Rational scale = 1;
  for (std::size_t i = 1; i <= alpha.length(); ++i) {
    scale /= n;
    lo += Rational(alpha.letter(i) - 1) * scale;
  }
  return IntervalQ{lo, lo + scale};
}

// Value of b(x) = sum (x_i - 1)/n^i, exact on eventually periodic points:
// a finite sum over the preperiod plus a geometric tail for the period.
inline Rational refinement_b_value(const Point& x, int n) {
  const std::size_t p = x.preperiod().length();
  const std::size_t m = x.period().length();
  Rational head = 0;
  Rational scale = 1;
  for (std::size_t i = 1; i <= p; ++i) {
    scale /= n;
    head += Rational(x.letter(i) - 1) * scale;
  }
  Rational block = 0;
  Rational bscale = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    bscale /= n;
    block += Rational(x.period().letter(i) - 1) * bscale;
  }
  Rational nm = rational_pow(n, static_cast<long>(m));
  return head + scale * block * nm / (nm - 1);
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline Word parse_word_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("expected '[' in word");
  ++i;
  std::vector<int> letters;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return Word{};
  }
  for (;;) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("expected digit in word");
    letters.push_back(std::stoi(std::string(s.substr(start, i - start))));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      return Word(std::move(letters));
    }
    throw std::invalid_argument("expected ',' or ']' in word");
  }
}

}  // namespace detail

// Word text form: [1,2]; empty word [].
inline Word parse_word(std::string_view s) {
  std::size_t i = 0;
  Word w = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing characters after word");
  return w;
}

// Point text form: pre:per, e.g. [2]:[1] for 2.1.1.1...
inline Point parse_point(std::string_view s) {
  std::size_t i = 0;
  Word pre = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ':') throw std::invalid_argument("expected ':' in point");
  ++i;
  Word per = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing characters after point");
  return Point(std::move(pre), std::move(per));
}

inline void validate_letters(const Word& w, int n) {
  for (int a : w.letters())
    if (a < 1 || a > n) throw std::invalid_argument("letter out of alphabet range");
}

}  // namespace cuntz
