#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/words.hpp"

namespace cuntz {

struct NotInGroupoid : std::invalid_argument {
  NotInGroupoid() : std::invalid_argument("tails of x and y never agree at offset k") {}
};

struct NotComposable : std::invalid_argument {
  NotComposable() : std::invalid_argument("domain of first element differs from range of second") {}
};

// A triple (x, k, y) with x_{j+k} = y_j for all j >= tail_index.  The
// tail index is kept minimal; validity is decided exactly from the
// periodic forms of x and y.
class GroupoidElement {
 public:
  const Point& x() const { return x_; }
  int k() const { return k_; }
  const Point& y() const { return y_; }
  std::size_t tail_index() const { return tail_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.k_ == b.k_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  GroupoidElement(Point x, int k, Point y, std::size_t tail)
      : x_(std::move(x)), k_(k), y_(std::move(y)), tail_(tail) {}

  friend GroupoidElement make_element(const Point&, int, const Point&);
  friend GroupoidElement compose(const GroupoidElement&, const GroupoidElement&);
  friend GroupoidElement inverse(const GroupoidElement&);

  // Shrinks a valid tail index to the minimal one.
  static std::size_t minimize_tail(const Point& x, int k, const Point& y, std::size_t from) {
    std::size_t lowest = k < 0 ? static_cast<std::size_t>(1 - k) : 1;
    std::size_t p = from;
    while (p > lowest &&
           x.letter(static_cast<std::size_t>(static_cast<long>(p) - 1 + k)) == y.letter(p - 1))
      --p;
    return p;
  }

  Point x_;
  int k_;
  Point y_;
  std::size_t tail_;
};

inline GroupoidElement make_element(const Point& x, int k, const Point& y) {
  // Beyond t0 both sequences are purely periodic, so tail agreement at any
  // offset >= t0 settles agreement everywhere further out.
  long t0 = 0;
  t0 = std::max(t0, static_cast<long>(y.preperiod().length()));
  t0 = std::max(t0, static_cast<long>(x.preperiod().length()) - k);
  t0 = std::max(t0, static_cast<long>(-k));
  if (shift(x, static_cast<std::size_t>(t0 + k)) != shift(y, static_cast<std::size_t>(t0)))
    throw NotInGroupoid();
  std::size_t tail =
      GroupoidElement::minimize_tail(x, k, y, static_cast<std::size_t>(t0) + 1);
  return GroupoidElement(x, k, y, tail);
}

inline GroupoidElement compose(const GroupoidElement& g, const GroupoidElement& h) {
  if (g.y() != h.x()) throw NotComposable();
  int k = g.k() + h.k();
  // Valid tail index for the product, derived from the factors' tails.
  long cand = static_cast<long>(h.tail_);
  cand = std::max(cand, static_cast<long>(g.tail_) - h.k_);
  cand = std::max(cand, k < 0 ? static_cast<long>(1 - k) : 1L);
  std::size_t tail =
      GroupoidElement::minimize_tail(g.x_, k, h.y_, static_cast<std::size_t>(cand));
  return GroupoidElement(g.x_, k, h.y_, tail);
}

inline GroupoidElement inverse(const GroupoidElement& g) {
  int k = -g.k();
  long cand = static_cast<long>(g.tail_index()) + g.k();
  cand = std::max(cand, k < 0 ? static_cast<long>(1 - k) : 1L);
  std::size_t tail =
      GroupoidElement::minimize_tail(g.y(), k, g.x(), static_cast<std::size_t>(cand));
  return GroupoidElement(g.y(), k, g.x(), tail);
}

inline GroupoidElement range_unit(const GroupoidElement& g) {
  return make_element(g.x(), 0, g.x());
}

inline GroupoidElement domain_unit(const GroupoidElement& g) {
  return make_element(g.y(), 0, g.y());
}

// The compact open set U_{alpha,beta} = {(alpha.g, l(alpha)-l(beta), beta.g)}.
struct Cylinder {
  Word alpha;
  Word beta;

  int degree() const {
    return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
  }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend std::strong_ordering operator<=>(const Cylinder&, const Cylinder&) = default;
};

inline bool in_cylinder(const GroupoidElement& g, const Cylinder& c) {
  return g.k() == c.degree() && is_prefix_of(c.alpha, g.x()) && is_prefix_of(c.beta, g.y()) &&
         shift(g.x(), c.alpha.length()) == shift(g.y(), c.beta.length());
}

// Containment U_{c} <= U_{d}: both words of c extend the words of d by a
// common suffix.  Same-degree cylinders either nest this way or are
// disjoint.
inline bool cylinder_contains(const Cylinder& outer, const Cylinder& inner) {
  if (outer.degree() != inner.degree()) return false;
  if (!outer.alpha.is_prefix_of(inner.alpha) || !outer.beta.is_prefix_of(inner.beta)) return false;
  return inner.alpha.drop_front(outer.alpha.length()) ==
         inner.beta.drop_front(outer.beta.length());
}

namespace detail {

inline void enumerate_words(int n, std::size_t len, const std::function<void(const Word&)>& fn,
                            std::vector<int>& scratch) {
  if (scratch.size() == len) {
    fn(Word(scratch));
    return;
  }
  for (int a = 1; a <= n; ++a) {
    scratch.push_back(a);
    enumerate_words(n, len, fn, scratch);
    scratch.pop_back();
  }
}

}  // namespace detail

inline void for_each_word(int n, std::size_t len, const std::function<void(const Word&)>& fn) {
  std::vector<int> scratch;
  scratch.reserve(len);
  detail::enumerate_words(n, len, fn, scratch);
}

inline std::vector<Word> all_words(int n, std::size_t len) {
  std::vector<Word> out;
  for_each_word(n, len, [&](const Word& w) { out.push_back(w); });
  return out;
}

// The n^m pairwise disjoint children {(alpha.d, beta.d) : l(d) = m}
// partitioning U_{alpha,beta}.
inline std::vector<Cylinder> refine_cylinder(const Cylinder& c, std::size_t m, int n) {
  std::vector<Cylinder> out;
  for_each_word(n, m, [&](const Word& d) {
    out.push_back(Cylinder{c.alpha.concat(d), c.beta.concat(d)});
  });
  return out;
}

inline std::string cylinder_to_string(const Cylinder& c) {
  return "U[" + word_to_string(c.alpha) + "|" + word_to_string(c.beta) + "]";
}

inline Cylinder parse_cylinder(std::string_view s) {
  std::size_t i = 0;
  detail::skip_ws(s, i);
  if (i + 1 >= s.size() || s[i] != 'U' || s[i + 1] != '[')
    throw std::invalid_argument("expected 'U[' in cylinder");
  i += 2;
  Word alpha = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != '|') throw std::invalid_argument("expected '|' in cylinder");
  ++i;
  Word beta = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ']') throw std::invalid_argument("expected ']' in cylinder");
  ++i;
  detail::skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing characters after cylinder");
  return Cylinder{std::move(alpha), std::move(beta)};
}

// Element text form: (point, k, point).
inline std::string element_to_string(const GroupoidElement& g) {
  return "(" + point_to_string(g.x()) + ", " + std::to_string(g.k()) + ", " +
         point_to_string(g.y()) + ")";
}

inline GroupoidElement parse_element(std::string_view s) {
  std::size_t i = 0;
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != '(') throw std::invalid_argument("expected '(' in element");
  ++i;
  Word pre = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ':') throw std::invalid_argument("expected ':' in element");
  ++i;
  Word per = detail::parse_word_at(s, i);
  Point x(std::move(pre), std::move(per));
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ',') throw std::invalid_argument("expected ',' in element");
  ++i;
  detail::skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == start) throw std::invalid_argument("expected integer k in element");
  int k = std::stoi(std::string(s.substr(start, i - start)));
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ',') throw std::invalid_argument("expected ',' in element");
  ++i;
  Word pre2 = detail::parse_word_at(s, i);
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ':') throw std::invalid_argument("expected ':' in element");
  ++i;
  Word per2 = detail::parse_word_at(s, i);
  Point y(std::move(pre2), std::move(per2));
  detail::skip_ws(s, i);
  if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected ')' in element");
  ++i;
  detail::skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing characters after element");
  return make_element(x, k, y);
}

}  // namespace cuntz
