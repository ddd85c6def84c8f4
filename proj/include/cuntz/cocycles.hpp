#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/groupoid.hpp"
#include "cuntz/rational.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

struct NotInUHFGroupoid : std::invalid_argument {
  NotInUHFGroupoid() : std::invalid_argument("tails of x and y never agree at offset zero") {}
};

// A function on the sequence space that depends only on the first N
// letters, stored as a total table on the n^N words of length N.
class DepthFunction {
 public:
  DepthFunction(int n, std::size_t depth, std::map<Word, Rational> table)
      : n_(n), depth_(depth), table_(std::move(table)) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
    std::size_t expect = 1;
    for (std::size_t i = 0; i < depth_; ++i) expect *= static_cast<std::size_t>(n_);
    if (table_.size() != expect)
      throw std::invalid_argument("depth function table must be total");
    for (const auto& [w, v] : table_) {
      if (w.length() != depth_) throw std::invalid_argument("table word of wrong length");
      validate_letters(w, n_);
    }
  }

  static DepthFunction constant(int n, Rational c) {
    return DepthFunction(n, 0, {{Word{}, std::move(c)}});
  }

  // f(x) = x_1.
  static DepthFunction first_letter(int n) {
    std::map<Word, Rational> t;
    for (int a = 1; a <= n; ++a) t.emplace(Word{a}, Rational(a));
    return DepthFunction(n, 1, std::move(t));
  }

  // Indicator of the length-N cylinder at w.
  static DepthFunction indicator(int n, const Word& w) {
    std::map<Word, Rational> t;
    for_each_word(n, w.length(), [&](const Word& u) { t.emplace(u, u == w ? 1 : 0); });
    return DepthFunction(n, w.length(), std::move(t));
  }

  int n() const { return n_; }
  std::size_t depth() const { return depth_; }
  const std::map<Word, Rational>& table() const { return table_; }

  Rational eval(const Point& x) const {
    std::vector<int> head;
    for (std::size_t i = 1; i <= depth_; ++i) head.push_back(x.letter(i));
    return table_.at(Word(std::move(head)));
  }

  Rational max_value() const {
    Rational m = table_.begin()->second;
    for (const auto& [w, v] : table_) m = std::max(m, v);
    return m;
  }
  Rational min_value() const {
    Rational m = table_.begin()->second;
    for (const auto& [w, v] : table_) m = std::min(m, v);
    return m;
  }

  friend bool operator==(const DepthFunction&, const DepthFunction&) = default;

 private:
  int n_;
  std::size_t depth_;
  std::map<Word, Rational> table_;
};

// Closed-form functions that are exactly evaluable on eventually periodic
// points.  Currently the refinement coordinate b(x) = sum (x_i - 1)/n^i.
struct BuiltinFunction {
  enum class Kind { REFINEMENT_B };
  Kind kind;
  int n;

  Rational eval(const Point& x) const { return refinement_b_value(x, n); }

  friend bool operator==(const BuiltinFunction&, const BuiltinFunction&) = default;
};

// Rational linear combination of depth tables and builtins; every value
// at an eventually periodic point is an exact rational.
class PointFunction {
 public:
  using Term = std::variant<DepthFunction, BuiltinFunction>;

  PointFunction(int n, std::vector<std::pair<Rational, Term>> terms)
      : n_(n), terms_(std::move(terms)) {
    for (const auto& [c, t] : terms_) {
      int tn = std::holds_alternative<DepthFunction>(t) ? std::get<DepthFunction>(t).n()
                                                        : std::get<BuiltinFunction>(t).n;
      if (tn != n_) throw std::invalid_argument("point function over mixed alphabets");
    }
  }

  PointFunction(DepthFunction f)  // NOLINT: implicit lift
      : PointFunction(f.n(), {{Rational(1), Term(std::move(f))}}) {}
  PointFunction(BuiltinFunction f)  // NOLINT: implicit lift
      : PointFunction(f.n, {{Rational(1), Term(std::move(f))}}) {}

  int n() const { return n_; }
  const std::vector<std::pair<Rational, Term>>& terms() const { return terms_; }

  Rational eval(const Point& x) const {
    Rational s = 0;
    for (const auto& [c, t] : terms_)
      s += c * std::visit([&](const auto& f) { return f.eval(x); }, t);
    return s;
  }

  // Largest table depth, or nothing when a builtin makes the function
  // depend on the whole sequence.
  std::optional<std::size_t> finite_depth() const {
    std::size_t d = 0;
    for (const auto& [c, t] : terms_) {
      if (std::holds_alternative<BuiltinFunction>(t)) return std::nullopt;
      d = std::max(d, std::get<DepthFunction>(t).depth());
    }
    return d;
  }

 private:
  int n_;
  std::vector<std::pair<Rational, Term>> terms_;
};

inline Rational eval_function(const PointFunction& f, const Point& x) { return f.eval(x); }

// The cocycle induced by a function on the sequence space, evaluated at a
// groupoid element.  For k >= 0 this is the sum of f over the first k
// shifts of x plus the telescoped tail difference; the tail sum stops at
// the element's tail index.  Negative k goes through the inverse.
inline Rational cocycle_eval(const PointFunction& f, const GroupoidElement& g) {
  if (g.k() < 0) return -cocycle_eval(f, inverse(g));
  Rational s = 0;
  for (int j = 0; j < g.k(); ++j) s += f.eval(shift(g.x(), static_cast<std::size_t>(j)));
  for (std::size_t t = 0; t + 1 < g.tail_index(); ++t) {
    s += f.eval(shift(g.x(), t + static_cast<std::size_t>(g.k())));
    s -= f.eval(shift(g.y(), t));
  }
  return s;
}

// Recovers the function from its cocycle by evaluating d(x, 1, Sx) on a
// representative point of every depth-N cylinder.  Round-trips to the
// input table.
inline DepthFunction function_from_cocycle(const DepthFunction& f) {
  std::map<Word, Rational> table;
  for_each_word(f.n(), f.depth(), [&](const Word& w) {
    Point x(w, Word{1});
    GroupoidElement g = make_element(x, 1, shift(x, 1));
    table.emplace(w, cocycle_eval(PointFunction(f), g));
  });
  return DepthFunction(f.n(), f.depth(), std::move(table));
}

// A cylinder neighborhood of g on which the cocycle of a depth-N table is
// constant: both index words are taken long enough that every term of the
// defining sum reads letters inside them.
inline Cylinder constancy_witness(const DepthFunction& f, const GroupoidElement& g) {
  const int n = f.n();
  const int k = g.k();
  if (k < 0) {
    Cylinder w = constancy_witness(f, inverse(g));
    return Cylinder{w.beta, w.alpha};
  }
  std::size_t kk = static_cast<std::size_t>(k);
  std::size_t beta_len = std::max(g.tail_index(), kk) + 1 + f.depth();
  Cylinder c{Word{}, Word{}};
  {
    std::vector<int> a, b;
    for (std::size_t i = 1; i <= beta_len + kk; ++i) a.push_back(g.x().letter(i));
    for (std::size_t i = 1; i <= beta_len; ++i) b.push_back(g.y().letter(i));
    c = Cylinder{Word(std::move(a)), Word(std::move(b))};
  }
  PointFunction pf(f);
  Rational value = cocycle_eval(pf, g);
  for (int i = 1; i <= n; ++i) {
    GroupoidElement rep = make_element(prepend(c.alpha.append(i), constant_point(1)), k,
                                       prepend(c.beta.append(i), constant_point(1)));
    if (cocycle_eval(pf, rep) != value)
      throw std::logic_error("constancy_witness: cocycle not constant on the cylinder");
  }
  return c;
}

struct NoCocycleWitness {
  Point x;
  Point y;
  // Multiset of the length-N windows seen along the first 2N shifts of
  // each point; equality forces every depth-N cocycle to vanish at
  // (x, 0, y).
  std::map<Word, int> x_windows;
  std::map<Word, int> y_windows;
};

// Two distinct tail-equivalent points that no depth-N cocycle separates:
// x = a21ag, y = a12ag with a = 2...2 (N-1 times) and g all ones.
inline NoCocycleWitness nococycle_counterexample(std::size_t N, int n) {
  if (N < 1) throw std::invalid_argument("window length must be >= 1");
  if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
  std::vector<int> a(N - 1, 2);
  std::vector<int> xs = a;
  xs.push_back(2);
  xs.push_back(1);
  xs.insert(xs.end(), a.begin(), a.end());
  std::vector<int> ys = a;
  ys.push_back(1);
  ys.push_back(2);
  ys.insert(ys.end(), a.begin(), a.end());
  NoCocycleWitness w{Point(Word(std::move(xs)), Word{1}), Point(Word(std::move(ys)), Word{1}),
                     {},
                     {}};
  for (std::size_t j = 0; j < 2 * N; ++j) {
    auto window = [&](const Point& p) {
      std::vector<int> v;
      for (std::size_t i = 1; i <= N; ++i) v.push_back(p.letter(j + i));
      return Word(std::move(v));
    };
    w.x_windows[window(w.x)] += 1;
    w.y_windows[window(w.y)] += 1;
  }
  return w;
}

// d(1bar, k, 1bar) = k * f(1bar): linear growth along the fixed point of
// the shift, so no cocycle with f(1bar) != 0 is bounded.
inline Rational unboundedness_witness(const PointFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("power must be >= 1");
  Point ones = constant_point(1);
  return cocycle_eval(f, make_element(ones, k, ones));
}

enum class UhfCocycle { REFINEMENT, STANDARD };

// The two classical cocycles on the degree-zero part.  The refinement
// cocycle is the coboundary of b, so its value is b(y) - b(x) and its
// sign matches the lexicographic order; the standard cocycle weights the
// i-th letter difference by n^{i-1}, so its last nonzero term dominates.
inline Rational uhf_cocycle_eval(UhfCocycle kind, int n, const Point& x, const Point& y) {
  GroupoidElement g = [&] {
    try {
      return make_element(x, 0, y);
    } catch (const NotInGroupoid&) {
      throw NotInUHFGroupoid();
    }
  }();
  Rational s = 0;
  Rational weight = 1;
  for (std::size_t i = 1; i < g.tail_index(); ++i) {
    if (kind == UhfCocycle::REFINEMENT) {
      weight /= n;
      s += weight * Rational(y.letter(i) - x.letter(i));
    } else {
      s += weight * Rational(x.letter(i) - y.letter(i));
      weight *= n;
    }
  }
  return s;
}

// Forced value of the extending function at 2...2(N twos).1bar, computed
// from the standard cocycle against 1bar.  The values n^{N-1} grow
// without bound, which is the obstruction to extending the standard
// cocycle beyond the degree-zero part.
inline Rational standard_obstruction(std::size_t N, int n) {
  if (N < 1) throw std::invalid_argument("obstruction index must be >= 1");
  Point ones = constant_point(1);
  Point x(Word(std::vector<int>(N, 2)), Word{1});
  return uhf_cocycle_eval(UhfCocycle::STANDARD, n, x, ones) -
         uhf_cocycle_eval(UhfCocycle::STANDARD, n, shift(x, 1), ones);
}

// Extends the trivial degree-zero cocycle d(x,0,y) = b(y) - b(x) to the
// whole groupoid: f = b o S - b induces the extension, and adding the
// constant c makes the shifted cocycle strictly positive in degree one.
inline std::pair<DepthFunction, Rational> trivial_extension(const DepthFunction& b) {
  std::map<Word, Rational> table;
  for_each_word(b.n(), b.depth() + 1, [&](const Word& w) {
    table.emplace(w, b.table().at(w.drop_front(1)) - b.table().at(w.prefix(b.depth())));
  });
  DepthFunction f(b.n(), b.depth() + 1, std::move(table));
  Rational c = b.max_value() - b.min_value() + 1;
  return {std::move(f), std::move(c)};
}

// supp(a) inside {d_F + shift*k >= 0}: each support cylinder is refined
// by the table depth, after which the cocycle is constant per child and
// one representative evaluation decides the sign.
inline bool analytic_membership(const AlgebraElement& a, const PointFunction& f,
                                const Rational& shift_per_degree) {
  auto depth = f.finite_depth();
  if (!depth)
    throw std::invalid_argument("analytic membership needs a finite-depth function");
  if (a.n() != f.n()) throw std::invalid_argument("mismatched alphabets");
  for (const auto& [c, v] : a.terms()) {
    bool ok = true;
    for_each_word(a.n(), *depth, [&](const Word& d) {
      if (!ok) return;
      GroupoidElement rep = make_element(prepend(c.alpha.concat(d), constant_point(1)),
                                         c.degree(),
                                         prepend(c.beta.concat(d), constant_point(1)));
      if (cocycle_eval(f, rep) + shift_per_degree * c.degree() < 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace cuntz
