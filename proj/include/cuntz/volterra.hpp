#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/groupoid.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

struct CharacterizationMismatch : std::logic_error {
  explicit CharacterizationMismatch(const std::string& what) : std::logic_error(what) {}
};

struct NotInR : std::invalid_argument {
  NotInR() : std::invalid_argument("cylinder is not contained in the strict-order set R") {}
};

struct NotInAlgebra : std::invalid_argument {
  NotInAlgebra() : std::invalid_argument("element is not supported in the Volterra spectrum") {}
};

struct NotInIntersection : std::invalid_argument {
  NotInIntersection()
      : std::invalid_argument("element or its adjoint leaves the Volterra subalgebra") {}
};

enum class PVVerdict { IN_R, IN_D0, IN_SE, IN_SC, NOT_IN_PV };

struct PVClassification {
  PVVerdict verdict;
  std::optional<int> condition;  // which of the five word conditions fired

  bool in_pv() const { return verdict != PVVerdict::NOT_IN_PV; }
};

inline bool tail_all_ones(const Point& x) { return x.period() == Word{1}; }
inline bool tail_all(const Point& x, int a) { return x.period() == Word{a}; }

namespace detail {

// The five prefix conditions defining the Volterra spectrum, evaluated on
// a presenting pair (alpha, beta).  Returns the index of the first
// condition that holds, or nothing.
inline std::optional<int> pv_condition(const Word& alpha, const Word& beta, int n) {
  const std::size_t la = alpha.length();
  const std::size_t lb = beta.length();
  if (la == lb) {
    if (lex_compare(alpha, beta) != Ordering::GT) return 1;
    return std::nullopt;
  }
  if (la < lb) {
    Ordering o = lex_compare(alpha, beta.prefix(la));
    if (o == Ordering::LT) return 2;
    if (o == Ordering::EQ) {
      for (std::size_t i = la + 1; i <= lb; ++i)
        if (beta.letter(i) != n) return std::nullopt;
      return 3;
    }
    return std::nullopt;
  }
  Ordering o = lex_compare(alpha.prefix(lb), beta);
  if (o == Ordering::LT) return 4;
  if (o == Ordering::EQ) {
    for (std::size_t i = lb + 1; i <= la; ++i)
      if (alpha.letter(i) != 1) return std::nullopt;
    return 5;
  }
  return std::nullopt;
}

}  // namespace detail

// Presenting pair for g used by the word-condition test.  The prefixes
// must be long enough to be a valid presentation (past the tail index),
// to put the first differing letter of x and y inside both words, and to
// push any length mismatch into the purely periodic region; otherwise a
// short pair can fail every condition on an element that is in the
// spectrum.
inline std::pair<Word, Word> presenting_pair(const GroupoidElement& g) {
  const auto kabs = static_cast<std::size_t>(g.k() < 0 ? -g.k() : g.k());
  std::size_t base = g.tail_index();
  base = std::max(base, g.x().preperiod().length());
  base = std::max(base, g.y().preperiod().length());
  if (auto j = first_difference(g.x(), g.y())) base = std::max(base, *j);
  const std::size_t lb = base + kabs;
  const auto la = static_cast<std::size_t>(static_cast<long>(lb) + g.k());
  std::vector<int> a, b;
  for (std::size_t i = 1; i <= la; ++i) a.push_back(g.x().letter(i));
  for (std::size_t i = 1; i <= lb; ++i) b.push_back(g.y().letter(i));
  return {Word(std::move(a)), Word(std::move(b))};
}

// Decides membership of g in the Volterra spectrum by both routes: the
// five-condition test on a presenting pair, and the direct point test
// against R, D0, S_e, S_c.  The two must agree.
inline PVClassification classify_pv(const GroupoidElement& g, int n) {
  PVVerdict verdict = PVVerdict::NOT_IN_PV;
  if (lex_compare(g.x(), g.y()) == Ordering::LT) {
    verdict = PVVerdict::IN_R;
  } else if (g.x() == g.y()) {
    if (g.k() == 0)
      verdict = PVVerdict::IN_D0;
    else if (g.k() < 0 && tail_all(g.x(), n))
      verdict = PVVerdict::IN_SE;
    else if (g.k() > 0 && tail_all_ones(g.x()))
      verdict = PVVerdict::IN_SC;
  }
  auto [alpha, beta] = presenting_pair(g);
  std::optional<int> condition = detail::pv_condition(alpha, beta, n);
  if (condition.has_value() != (verdict != PVVerdict::NOT_IN_PV))
    throw CharacterizationMismatch("word conditions disagree with point classification at " +
                                   element_to_string(g));
  return PVClassification{verdict, condition};
}

// Cylinder-level membership: one of the five conditions holds for the
// index pair, which is equivalent to setwise containment in the spectrum.
inline bool cylinder_in_pv(const Cylinder& c, int n) {
  return detail::pv_condition(c.alpha, c.beta, n).has_value();
}

// Containment in R: neither word is a prefix of the other and alpha
// precedes beta at the first difference.
inline bool cylinder_in_r(const Cylinder& c) {
  std::size_t m = std::min(c.alpha.length(), c.beta.length());
  for (std::size_t i = 1; i <= m; ++i)
    if (c.alpha.letter(i) != c.beta.letter(i)) return c.alpha.letter(i) < c.beta.letter(i);
  return false;
}

// Nest projection for the n-adic cut at the right endpoint of
// word_interval(w): the sum of all chi_{alpha,alpha} with alpha <= w in
// the lexicographic order at level l(w).
inline AlgebraElement projection_px(int n, const Word& w) {
  if (w.empty()) throw std::invalid_argument("projection cut word must be nonempty");
  validate_letters(w, n);
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for_each_word(n, w.length(), [&](const Word& alpha) {
    if (lex_compare(alpha, w) != Ordering::GT)
      raw.emplace_back(Cylinder{alpha, alpha}, ComplexQ(1));
  });
  return AlgebraElement::from_terms(n, std::move(raw));
}

inline bool volterra_membership(const AlgebraElement& a) {
  for (const auto& [c, v] : a.terms())
    if (!cylinder_in_pv(c, a.n())) return false;
  return true;
}

inline bool radical_membership(const AlgebraElement& a) {
  for (const auto& [c, v] : a.terms())
    if (!cylinder_in_r(c)) return false;
  return true;
}

// p^perp a p = 0 for the cut defined by w, i.e. a leaves the nest
// projection invariant.
inline bool nest_invariance_check(const AlgebraElement& a, const Word& w) {
  AlgebraElement p = projection_px(a.n(), w);
  AlgebraElement comp = sub(AlgebraElement::identity(a.n()), p);
  return mul(mul(comp, a), p).is_zero();
}

// For elements with both a and a* in the Volterra subalgebra, membership
// in the diagonal: the intersection with the adjoint algebra is the masa.
inline bool triangularity_check(const AlgebraElement& a) {
  if (!volterra_membership(a) || !volterra_membership(adjoint(a))) throw NotInIntersection();
  return is_diagonal(a);
}

// Commutators of Volterra members land in the radical.
inline bool commutator_ideal_check(const AlgebraElement& a, const AlgebraElement& b) {
  if (!volterra_membership(a) || !volterra_membership(b)) throw NotInAlgebra();
  return radical_membership(commutator(a, b));
}

namespace detail {

// Largest level-l word strictly preceding w; requires w not all ones.
inline Word lex_predecessor(const Word& w, int n) {
  std::vector<int> v = w.letters();
  for (std::size_t i = v.size(); i >= 1; --i) {
    if (v[i - 1] > 1) {
      v[i - 1] -= 1;
      for (std::size_t j = i; j < v.size(); ++j) v[j] = n;
      return Word(std::move(v));
    }
  }
  throw std::logic_error("lex_predecessor: word has no predecessor");
}

}  // namespace detail

// Nest cuts with chi_c = p_low * chi_c * (I - p_high); exists exactly for
// cylinders inside R, where the range interval sits left of the domain.
inline std::pair<Word, Word> radical_generator_form(const Cylinder& c, int n) {
  if (!cylinder_in_r(c)) throw NotInR();
  Word w_low = c.alpha;
  Word w_high = detail::lex_predecessor(c.beta, n);
  AlgebraElement chi = AlgebraElement::cuntz_pi(n, c);
  AlgebraElement p_low = projection_px(n, w_low);
  AlgebraElement p_high = projection_px(n, w_high);
  AlgebraElement recon =
      mul(mul(p_low, chi), sub(AlgebraElement::identity(n), p_high));
  if (recon != chi)
    throw std::logic_error("radical_generator_form: cut identity failed for " +
                           cylinder_to_string(c));
  return {std::move(w_low), std::move(w_high)};
}

enum class PointClass { GENERIC, TAIL_ONE, TAIL_N };

// Polynomial data of the diagonal-evaluation homomorphism at a point:
// a single constant off the n-adic set, a polynomial in z at tail-one
// points (k >= 0), and a polynomial in z with exponent -k at tail-n
// points (k <= 0).
struct PhiValue {
  PointClass point_class;
  std::vector<std::pair<int, ComplexQ>> poly;  // (exponent, coefficient)

  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

inline PhiValue phi_eval(const AlgebraElement& a, const Point& x) {
  if (!volterra_membership(a)) throw NotInAlgebra();
  const int n = a.n();
  int maxdeg = 0;
  for (const auto& [c, v] : a.terms())
    maxdeg = std::max(maxdeg, c.degree() < 0 ? -c.degree() : c.degree());
  PhiValue out;
  auto push = [&](int exponent, const ComplexQ& v) {
    if (!v.is_zero()) out.poly.emplace_back(exponent, v);
  };
  if (tail_all_ones(x)) {
    out.point_class = PointClass::TAIL_ONE;
    for (int k = 0; k <= maxdeg; ++k) push(k, evaluate(a, make_element(x, k, x)));
  } else if (tail_all(x, n)) {
    out.point_class = PointClass::TAIL_N;
    for (int k = 0; k <= maxdeg; ++k) push(k, evaluate(a, make_element(x, -k, x)));
  } else {
    out.point_class = PointClass::GENERIC;
    push(0, evaluate(a, make_element(x, 0, x)));
  }
  return out;
}

inline PhiValue phi_product(const PhiValue& a, const PhiValue& b) {
  if (a.point_class != b.point_class)
    throw std::invalid_argument("phi_product: mismatched point classes");
  std::map<int, ComplexQ> acc;
  for (const auto& [i, u] : a.poly)
    for (const auto& [j, v] : b.poly) acc[i + j] += u * v;
  PhiValue out{a.point_class, {}};
  for (const auto& [e, v] : acc)
    if (!v.is_zero()) out.poly.emplace_back(e, v);
  return out;
}

// A positive-degree diagonal element over a mixed-tail periodic point:
// outside the spectrum in both orientations, witnessing that the
// subalgebra plus its adjoint misses part of the groupoid.
inline GroupoidElement dirichlet_gap_witness(int n) {
  if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
  Point x(Word{}, Word{1, 2});
  GroupoidElement g = make_element(x, 2, x);
  if (classify_pv(g, n).in_pv() || classify_pv(inverse(g), n).in_pv())
    throw std::logic_error("dirichlet_gap_witness: classification changed");
  return g;
}

// A sequence inside the spectrum converging to a limit outside it.
// Returns (member, limit) for the parameter p.
inline std::pair<GroupoidElement, GroupoidElement> pv_nonclosed_witness(int p, int n) {
  if (p < 1) throw std::invalid_argument("witness parameter must be >= 1");
  if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
  const Word delta{2, 1};
  Word ypre{};
  for (int i = 0; i < p; ++i) ypre = ypre.concat(delta);
  Point y(ypre, Word{1});
  Point z(ypre.concat(delta), Word{1});
  GroupoidElement member = make_element(y, -2, z);
  Point limit_pt(Word{}, delta);
  GroupoidElement limit = make_element(limit_pt, -2, limit_pt);
  if (classify_pv(member, n).verdict != PVVerdict::IN_R)
    throw std::logic_error("pv_nonclosed_witness: member left R");
  if (classify_pv(limit, n).in_pv())
    throw std::logic_error("pv_nonclosed_witness: limit entered the spectrum");
  return {std::move(member), std::move(limit)};
}

}  // namespace cuntz
