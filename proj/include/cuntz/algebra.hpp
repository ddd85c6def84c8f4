#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cuntz/groupoid.hpp"
#include "cuntz/rational.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

// chi_{alpha,beta} * chi_{gamma,delta} as a single cylinder, or nothing
// when the inner words are incompatible and the product vanishes.
inline std::optional<Cylinder> word_product(const Cylinder& c1, const Cylinder& c2) {
  const Word& beta = c1.beta;
  const Word& gamma = c2.alpha;
  if (beta.length() <= gamma.length()) {
    if (!beta.is_prefix_of(gamma)) return std::nullopt;
    return Cylinder{c1.alpha.concat(gamma.drop_front(beta.length())), c2.beta};
  }
  if (!gamma.is_prefix_of(beta)) return std::nullopt;
  return Cylinder{c1.alpha, c2.beta.concat(beta.drop_front(gamma.length()))};
}

// A finite complex-rational combination of cylinder indicators in
// canonical form: within each degree the support cylinders are pairwise
// disjoint, and no full sibling family with a common coefficient is left
// uncoarsened.  Equality of elements is term-map identity.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
  }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }

  static AlgebraElement identity(int n) {
    return from_terms(n, {{Cylinder{{}, {}}, ComplexQ(1)}});
  }

  // chi_{alpha,beta}, i.e. the Cuntz partial isometry S_alpha S*_beta.
  static AlgebraElement cuntz_pi(int n, Cylinder c) {
    validate_letters(c.alpha, n);
    validate_letters(c.beta, n);
    return from_terms(n, {{std::move(c), ComplexQ(1)}});
  }

  static AlgebraElement generator(int n, int i) {  // S_i
    return cuntz_pi(n, Cylinder{Word{i}, Word{}});
  }

  static AlgebraElement from_terms(int n, std::vector<std::pair<Cylinder, ComplexQ>> raw) {
    AlgebraElement a(n);
    a.terms_ = canonicalize(n, std::move(raw));
    return a;
  }

  int n() const { return n_; }
  const std::map<Cylinder, ComplexQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  // Canonical form: refine overlapping same-degree cylinders to a common
  // alpha length, merge, drop zeros, then coarsen full equal-coefficient
  // sibling families until none remain.
  static std::map<Cylinder, ComplexQ> canonicalize(
      int n, std::vector<std::pair<Cylinder, ComplexQ>> raw) {
    std::map<int, std::size_t> target;  // degree -> common alpha length
    for (const auto& [c, v] : raw) {
      auto [it, fresh] = target.try_emplace(c.degree(), c.alpha.length());
      if (!fresh) it->second = std::max(it->second, c.alpha.length());
    }
    std::map<Cylinder, ComplexQ> acc;
    for (auto& [c, v] : raw) {
      if (v.is_zero()) continue;
      std::size_t extra = target.at(c.degree()) - c.alpha.length();
      for (const Cylinder& child : refine_cylinder(c, extra, n)) {
        auto [it, fresh] = acc.try_emplace(child, v);
        if (!fresh) {
          it->second += v;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    // Sibling coarsening.  A merge can enable another one level up, so
    // iterate to a fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = acc.begin(); it != acc.end(); ++it) {
        const Cylinder& c = it->first;
        if (c.alpha.empty() || c.beta.empty()) continue;
        if (c.alpha.back() != c.beta.back()) continue;
        Cylinder parent{c.alpha.drop_back(), c.beta.drop_back()};
        bool all = true;
        for (int i = 1; i <= n && all; ++i) {
          auto sib = acc.find(Cylinder{parent.alpha.append(i), parent.beta.append(i)});
          if (sib == acc.end() || sib->second != it->second) all = false;
        }
        if (!all) continue;
        ComplexQ v = it->second;
        for (int i = 1; i <= n; ++i)
          acc.erase(Cylinder{parent.alpha.append(i), parent.beta.append(i)});
        acc.emplace(parent, v);
        changed = true;
        break;
      }
    }
    return acc;
  }

 private:
  int n_;
  std::map<Cylinder, ComplexQ> terms_;
};

inline void require_same_alphabet(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("elements over different alphabets");
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_alphabet(a, b);
  std::vector<std::pair<Cylinder, ComplexQ>> raw(a.terms().begin(), a.terms().end());
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

inline AlgebraElement scale(const ComplexQ& c, const AlgebraElement& a) {
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& [cyl, v] : a.terms()) raw.emplace_back(cyl, c * v);
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  return add(a, scale(ComplexQ(-1), b));
}

inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_alphabet(a, b);
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& [c1, v1] : a.terms()) {
    for (const auto& [c2, v2] : b.terms()) {
      if (auto c = word_product(c1, c2)) raw.emplace_back(*c, v1 * v2);
    }
  }
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

inline AlgebraElement adjoint(const AlgebraElement& a) {
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& [c, v] : a.terms()) raw.emplace_back(Cylinder{c.beta, c.alpha}, v.conj());
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return sub(mul(a, b), mul(b, a));
}

// The value of a, viewed as a function on the groupoid, at g: the
// coefficient of the unique supporting cylinder containing g.
inline ComplexQ evaluate(const AlgebraElement& a, const GroupoidElement& g) {
  for (const auto& [c, v] : a.terms())
    if (in_cylinder(g, c)) return v;
  return ComplexQ(0);
}

// Degree-k part of a.  Summing over all k recovers a; the gauge action
// scales this part by lambda^k.
inline AlgebraElement fourier_component(const AlgebraElement& a, int k) {
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& [c, v] : a.terms())
    if (c.degree() == k) raw.emplace_back(c, v);
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

inline std::vector<int> degrees(const AlgebraElement& a) {
  std::vector<int> out;
  for (const auto& [c, v] : a.terms())
    if (std::find(out.begin(), out.end(), c.degree()) == out.end()) out.push_back(c.degree());
  std::sort(out.begin(), out.end());
  return out;
}

// Gauge automorphism for lambda in {1, -1, i, -i}: multiplies each
// degree-k term by lambda^k.  Only the four Gaussian units keep the
// scalars rational, which is all the finite-sum theory needs.
inline AlgebraElement gauge_automorphism(const AlgebraElement& a, const ComplexQ& lambda) {
  const bool unit = (lambda == ComplexQ(1) || lambda == ComplexQ(Rational(-1)) ||
                     lambda == ComplexQ(Rational(0), Rational(1)) ||
                     lambda == ComplexQ(Rational(0), Rational(-1)));
  if (!unit) throw std::invalid_argument("gauge automorphism needs a fourth root of unity");
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& [c, v] : a.terms()) {
    ComplexQ factor(1);
    int k = c.degree();
    for (int i = 0; i < (k < 0 ? -k : k); ++i) factor = factor * lambda;
    if (k < 0) factor = ComplexQ(1) / factor;
    raw.emplace_back(c, factor * v);
  }
  return AlgebraElement::from_terms(a.n(), std::move(raw));
}

// Triangle-inequality upper bound on the operator norm: each indicator
// has norm one.
inline Rational sum_norm(const AlgebraElement& a) {
  Rational s = 0;
  for (const auto& [c, v] : a.terms()) {
    s += v.re < 0 ? Rational(-v.re) : v.re;
    s += v.im < 0 ? Rational(-v.im) : v.im;
  }
  return s;
}

// Squared sup of the coefficients: a lower bound on the squared operator
// norm, since point evaluations are norm decreasing.
inline Rational sup_norm_sq(const AlgebraElement& a) {
  Rational m = 0;
  for (const auto& [c, v] : a.terms()) m = std::max(m, v.norm_sq());
  return m;
}

inline std::size_t max_word_length(const AlgebraElement& a) {
  std::size_t m = 0;
  for (const auto& [c, v] : a.terms()) m = std::max({m, c.alpha.length(), c.beta.length()});
  return m;
}

inline bool is_diagonal(const AlgebraElement& a) {
  for (const auto& [c, v] : a.terms())
    if (c.alpha != c.beta) return false;
  return true;
}

}  // namespace cuntz
