#pragma once

// Deterministic random generators shared by the unit and acceptance
// suites.  Sizes follow the desk-scale bounds used throughout: words up
// to length 4, periods up to length 3.

#include <random>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/groupoid.hpp"
#include "cuntz/volterra.hpp"
#include "cuntz/words.hpp"

namespace testsupport {

class Rng {
 public:
  explicit Rng(unsigned seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  int pick_n() { return uniform(2, 3); }

  cuntz::Word word(int n, int maxlen, int minlen = 0) {
    int len = uniform(minlen, maxlen);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) letters.push_back(uniform(1, n));
    return cuntz::Word(std::move(letters));
  }

  cuntz::Point point(int n, int maxpre = 4, int maxper = 3) {
    return cuntz::Point(word(n, maxpre), word(n, maxper, 1));
  }

  cuntz::Cylinder cylinder(int n, int maxlen = 4) {
    return cuntz::Cylinder{word(n, maxlen), word(n, maxlen)};
  }

  // A groupoid element presented as (alpha.g, l(alpha)-l(beta), beta.g).
  cuntz::GroupoidElement element(int n, int maxlen = 4) {
    cuntz::Word alpha = word(n, maxlen);
    cuntz::Word beta = word(n, maxlen);
    cuntz::Point gamma = point(n, 2, 3);
    return cuntz::make_element(
        cuntz::prepend(alpha, gamma),
        static_cast<int>(alpha.length()) - static_cast<int>(beta.length()),
        cuntz::prepend(beta, gamma));
  }

  // A random element of the cylinder, built by choosing a periodic tail.
  cuntz::GroupoidElement element_in(const cuntz::Cylinder& c, int n) {
    cuntz::Point gamma = point(n, 2, 3);
    return cuntz::make_element(cuntz::prepend(c.alpha, gamma), c.degree(),
                               cuntz::prepend(c.beta, gamma));
  }

  // A composable pair (g, h): the right leg of h re-presents g's domain
  // point as (first `drop` letters).tail and prepends a fresh word.
  std::pair<cuntz::GroupoidElement, cuntz::GroupoidElement> composable_pair(int n,
                                                                            int maxlen = 4) {
    cuntz::GroupoidElement g = element(n, maxlen);
    cuntz::Point mid = g.y();
    cuntz::Word beta = word(n, maxlen);
    auto drop = static_cast<std::size_t>(uniform(0, 3));
    cuntz::Point z = cuntz::prepend(beta, cuntz::shift(mid, drop));
    int k2 = static_cast<int>(drop) - static_cast<int>(beta.length());
    return {g, cuntz::make_element(mid, k2, z)};
  }

  cuntz::ComplexQ coefficient() {
    cuntz::Rational re(uniform(-3, 3), uniform(1, 3));
    cuntz::Rational im(uniform(-2, 2), uniform(1, 3));
    return cuntz::ComplexQ(re, im);
  }

  cuntz::ComplexQ nonzero_coefficient() {
    for (;;) {
      cuntz::ComplexQ c = coefficient();
      if (!c.is_zero()) return c;
    }
  }

  cuntz::AlgebraElement algebra_element(int n, int max_terms = 3, int maxlen = 2) {
    std::vector<std::pair<cuntz::Cylinder, cuntz::ComplexQ>> raw;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) raw.emplace_back(cylinder(n, maxlen), coefficient());
    return cuntz::AlgebraElement::from_terms(n, std::move(raw));
  }

  cuntz::AlgebraElement nonzero_algebra_element(int n, int max_terms = 3, int maxlen = 2) {
    for (;;) {
      cuntz::AlgebraElement a = algebra_element(n, max_terms, maxlen);
      if (!a.is_zero()) return a;
    }
  }

  // Random element supported inside the Volterra spectrum.
  cuntz::AlgebraElement volterra_element(int n, int max_terms = 3, int maxlen = 3) {
    std::vector<std::pair<cuntz::Cylinder, cuntz::ComplexQ>> raw;
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
      for (int guard = 0; guard < 200; ++guard) {
        cuntz::Cylinder c = cylinder(n, maxlen);
        if (cuntz::cylinder_in_pv(c, n)) {
          raw.emplace_back(std::move(c), coefficient());
          break;
        }
      }
    }
    return cuntz::AlgebraElement::from_terms(n, std::move(raw));
  }

  cuntz::AlgebraElement diagonal_element(int n, int max_terms = 3, int maxlen = 3) {
    std::vector<std::pair<cuntz::Cylinder, cuntz::ComplexQ>> raw;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      cuntz::Word w = word(n, maxlen);
      raw.emplace_back(cuntz::Cylinder{w, w}, coefficient());
    }
    return cuntz::AlgebraElement::from_terms(n, std::move(raw));
  }

 private:
  std::mt19937_64 engine_;
};

// Pointwise convolution of a and b at g, summed over the finitely many
// mid-points determined by a's support.  Independent of word_product.
inline cuntz::ComplexQ convolution_oracle(const cuntz::AlgebraElement& a,
                                          const cuntz::AlgebraElement& b,
                                          const cuntz::GroupoidElement& g) {
  cuntz::ComplexQ total(0);
  for (const auto& [c, v] : a.terms()) {
    if (!cuntz::is_prefix_of(c.alpha, g.x())) continue;
    // The mid-point forced by this support cylinder.
    cuntz::Point z = cuntz::prepend(c.beta, cuntz::shift(g.x(), c.alpha.length()));
    try {
      cuntz::GroupoidElement right = cuntz::make_element(z, g.k() - c.degree(), g.y());
      total += v * cuntz::evaluate(b, right);
    } catch (const cuntz::NotInGroupoid&) {
      // No compatible right leg: this mid-point contributes nothing.
    }
  }
  return total;
}

}  // namespace testsupport
