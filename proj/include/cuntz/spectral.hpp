#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/groupoid.hpp"
#include "cuntz/volterra.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

struct DepthTooSmall : std::invalid_argument {
  DepthTooSmall() : std::invalid_argument("depth is below the longest word involved") {}
};

enum class NamedSet { D0, P_UHF, P_PLUS, Q_REF, Q_ST, QREF_PLUS, QST_PLUS, P_V, R, S_E, S_C };

inline std::string named_set_to_string(NamedSet s) {
  switch (s) {
    case NamedSet::D0: return "D0";
    case NamedSet::P_UHF: return "P_UHF";
    case NamedSet::P_PLUS: return "P_PLUS";
    case NamedSet::Q_REF: return "Q_REF";
    case NamedSet::Q_ST: return "Q_ST";
    case NamedSet::QREF_PLUS: return "QREF_PLUS";
    case NamedSet::QST_PLUS: return "QST_PLUS";
    case NamedSet::P_V: return "P_V";
    case NamedSet::R: return "R";
    case NamedSet::S_E: return "S_E";
    case NamedSet::S_C: return "S_C";
  }
  throw std::logic_error("unknown named set");
}

inline std::optional<NamedSet> named_set_from_string(std::string_view s) {
  for (NamedSet v : {NamedSet::D0, NamedSet::P_UHF, NamedSet::P_PLUS, NamedSet::Q_REF,
                     NamedSet::Q_ST, NamedSet::QREF_PLUS, NamedSet::QST_PLUS, NamedSet::P_V,
                     NamedSet::R, NamedSet::S_E, NamedSet::S_C})
    if (named_set_to_string(v) == s) return v;
  return std::nullopt;
}

namespace detail {

// Last index at which x and y differ, for a degree-zero pair (finitely
// many differences); nothing if x == y.
inline std::optional<std::size_t> last_difference(const GroupoidElement& g) {
  std::optional<std::size_t> last;
  for (std::size_t j = 1; j < g.tail_index(); ++j)
    if (g.x().letter(j) != g.y().letter(j)) last = j;
  return last;
}

}  // namespace detail

inline bool point_in_named(NamedSet s, const GroupoidElement& g, int n) {
  switch (s) {
    case NamedSet::D0:
      return g.k() == 0 && g.x() == g.y();
    case NamedSet::P_UHF:
      return g.k() == 0;
    case NamedSet::P_PLUS:
      return g.k() >= 0;
    case NamedSet::Q_REF:
      return g.k() == 0 && lex_compare(g.x(), g.y()) != Ordering::GT;
    case NamedSet::Q_ST: {
      if (g.k() != 0) return false;
      auto last = detail::last_difference(g);
      if (!last) return true;
      // Standard order: the last differing letter is the most significant.
      return g.x().letter(*last) > g.y().letter(*last);
    }
    case NamedSet::QREF_PLUS:
      return g.k() > 0 || point_in_named(NamedSet::Q_REF, g, n);
    case NamedSet::QST_PLUS:
      return g.k() > 0 || point_in_named(NamedSet::Q_ST, g, n);
    case NamedSet::P_V:
      return classify_pv(g, n).in_pv();
    case NamedSet::R:
      return lex_compare(g.x(), g.y()) == Ordering::LT;
    case NamedSet::S_E:
      return g.x() == g.y() && g.k() < 0 && tail_all(g.x(), n);
    case NamedSet::S_C:
      return g.x() == g.y() && g.k() > 0 && tail_all_ones(g.x());
  }
  throw std::logic_error("unknown named set");
}

// Exact cylinder-in-named-set tests.  Each reduces to a condition on the
// index words because the remaining tail is shared by both sides.
inline bool cylinder_in_named(NamedSet s, const Cylinder& c, int n) {
  const bool deg0 = c.alpha.length() == c.beta.length();
  switch (s) {
    case NamedSet::D0:
      return c.alpha == c.beta;
    case NamedSet::P_UHF:
      return deg0;
    case NamedSet::P_PLUS:
      return c.degree() >= 0;
    case NamedSet::Q_REF:
      return deg0 && lex_compare(c.alpha, c.beta) != Ordering::GT;
    case NamedSet::Q_ST:
      return deg0 && rev_lex_compare(c.alpha, c.beta) != Ordering::LT;
    case NamedSet::QREF_PLUS:
      return c.degree() > 0 || cylinder_in_named(NamedSet::Q_REF, c, n);
    case NamedSet::QST_PLUS:
      return c.degree() > 0 || cylinder_in_named(NamedSet::Q_ST, c, n);
    case NamedSet::P_V:
      return cylinder_in_pv(c, n);
    case NamedSet::R:
      return cylinder_in_r(c);
    case NamedSet::S_E:
    case NamedSet::S_C:
      return false;  // these sets contain no cylinder
  }
  throw std::logic_error("unknown named set");
}

// A finite union of cylinders and named subsets of the groupoid.
class SpectralSet {
 public:
  explicit SpectralSet(int n) : n_(n) {}
  SpectralSet(int n, std::set<Cylinder> cylinders, std::set<NamedSet> named = {})
      : n_(n), cylinders_(std::move(cylinders)), named_(std::move(named)) {}

  int n() const { return n_; }
  const std::set<Cylinder>& cylinders() const { return cylinders_; }
  const std::set<NamedSet>& named() const { return named_; }

  void insert(Cylinder c) { cylinders_.insert(std::move(c)); }
  void insert(NamedSet s) { named_.insert(s); }
  bool empty() const { return cylinders_.empty() && named_.empty(); }

 private:
  int n_;
  std::set<Cylinder> cylinders_;
  std::set<NamedSet> named_;
};

inline bool point_in(const SpectralSet& set, const GroupoidElement& g) {
  for (NamedSet s : set.named())
    if (point_in_named(s, g, set.n())) return true;
  for (const Cylinder& c : set.cylinders())
    if (in_cylinder(g, c)) return true;
  return false;
}

// The support set of a family of elements; equals the spectrum of the
// bimodule they generate, since diagonal compressions never enlarge
// support and every supported point is attained by a generator.
inline SpectralSet sigma(const std::vector<AlgebraElement>& generators) {
  if (generators.empty()) throw std::invalid_argument("sigma: need at least one generator");
  SpectralSet out(generators.front().n());
  for (const AlgebraElement& a : generators) {
    require_same_alphabet(generators.front(), a);
    for (const auto& [c, v] : a.terms()) out.insert(c);
  }
  return out;
}

// supp(a) contained in P.  Support cylinders are refined far enough that
// the per-child tests (exact for named sets, nesting for cylinders)
// decide containment in the union.
inline bool supported_in(const AlgebraElement& a, const SpectralSet& P) {
  const int n = a.n();
  if (P.n() != n) throw std::invalid_argument("supported_in: mismatched alphabets");
  for (const auto& [c, v] : a.terms()) {
    std::size_t extra = P.named().empty() ? 0 : 3;
    for (const Cylinder& p : P.cylinders())
      if (p.degree() == c.degree() && p.alpha.length() > c.alpha.length())
        extra = std::max(extra, p.alpha.length() - c.alpha.length());
    for (const Cylinder& child : refine_cylinder(c, extra, n)) {
      bool covered = false;
      for (NamedSet s : P.named())
        if (cylinder_in_named(s, child, n)) {
          covered = true;
          break;
        }
      for (auto it = P.cylinders().begin(); !covered && it != P.cylinders().end(); ++it)
        if (cylinder_contains(*it, child)) covered = true;
      if (!covered) return false;
    }
  }
  return true;
}

// Compares two cylinder unions as subsets of the groupoid by refining
// each degree class to a common length.
inline bool same_cylinder_union(const SpectralSet& a, const SpectralSet& b) {
  if (!a.named().empty() || !b.named().empty())
    throw std::invalid_argument("same_cylinder_union: cylinder sets only");
  auto normalize = [](const SpectralSet& s) {
    std::map<int, std::size_t> target;
    for (const Cylinder& c : s.cylinders()) {
      auto [it, fresh] = target.try_emplace(c.degree(), c.alpha.length());
      if (!fresh) it->second = std::max(it->second, c.alpha.length());
    }
    return target;
  };
  std::map<int, std::size_t> target = normalize(a);
  for (const auto& [deg, len] : normalize(b)) {
    auto [it, fresh] = target.try_emplace(deg, len);
    if (!fresh) it->second = std::max(it->second, len);
  }
  auto expand = [&](const SpectralSet& s) {
    std::set<Cylinder> out;
    for (const Cylinder& c : s.cylinders())
      for (const Cylinder& child :
           refine_cylinder(c, target.at(c.degree()) - c.alpha.length(), s.n()))
        out.insert(child);
    return out;
  };
  return expand(a) == expand(b);
}

inline std::string spectral_set_to_string(const SpectralSet& s) {
  std::string out;
  for (NamedSet v : s.named()) {
    if (!out.empty()) out += " + ";
    out += named_set_to_string(v);
  }
  for (const Cylinder& c : s.cylinders()) {
    if (!out.empty()) out += " + ";
    out += cylinder_to_string(c);
  }
  return out.empty() ? "(empty)" : out;
}

inline SpectralSet parse_spectral_set(std::string_view text, int n) {
  SpectralSet out(n);
  std::size_t i = 0;
  bool first = true;
  while (true) {
    detail::skip_ws(text, i);
    if (i == text.size()) {
      if (first) break;
      throw std::invalid_argument("expected a set component after '+'");
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+') ++i;
    std::string_view tok = text.substr(start, i - start);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (auto named = named_set_from_string(tok)) {
      out.insert(*named);
    } else {
      Cylinder c = parse_cylinder(tok);
      validate_letters(c.alpha, n);
      validate_letters(c.beta, n);
      out.insert(std::move(c));
    }
    first = false;
    if (i < text.size() && text[i] == '+') ++i;
  }
  return out;
}

// Exact linear span of the two-sided diagonal compressions of a
// generating family, truncated at a word-length depth.  Vectors live in
// fixed per-degree coordinates (alpha refined to depth + max(0, k)), so
// membership is a triangular solve over the complex rationals.
class BimoduleSpan {
 public:
  BimoduleSpan(const std::vector<AlgebraElement>& generators, std::size_t depth)
      : n_(generators.empty() ? 0 : generators.front().n()), depth_(depth) {
    if (generators.empty())
      throw std::invalid_argument("bimodule span: need at least one generator");
    for (const AlgebraElement& g : generators) {
      require_same_alphabet(generators.front(), g);
      if (max_word_length(g) > depth) throw DepthTooSmall();
    }
    std::vector<AlgebraElement> projections;
    for (std::size_t len = 0; len <= depth; ++len)
      for_each_word(n_, len, [&](const Word& w) {
        projections.push_back(AlgebraElement::cuntz_pi(n_, Cylinder{w, w}));
      });
    for (const AlgebraElement& g : generators)
      for (const AlgebraElement& e : projections) {
        AlgebraElement left = mul(e, g);
        if (left.is_zero()) continue;
        for (const AlgebraElement& e2 : projections) {
          AlgebraElement v = mul(left, e2);
          if (!v.is_zero()) insert(expand(v));
        }
      }
  }

  int n() const { return n_; }
  std::size_t depth() const { return depth_; }

  bool contains(const AlgebraElement& candidate) const {
    if (candidate.n() != n_) throw std::invalid_argument("candidate over a different alphabet");
    if (max_word_length(candidate) > depth_) throw DepthTooSmall();
    std::map<Cylinder, ComplexQ> v = expand(candidate);
    while (!v.empty()) {
      auto it = rows_.find(v.begin()->first);
      if (it == rows_.end()) return false;
      ComplexQ factor = v.begin()->second;  // copy: the pivot node dies first
      subtract_scaled(v, factor, it->second);
    }
    return true;
  }

 private:
  std::map<Cylinder, ComplexQ> expand(const AlgebraElement& a) const {
    std::map<Cylinder, ComplexQ> out;
    for (const auto& [c, v] : a.terms()) {
      std::size_t target = depth_ + static_cast<std::size_t>(std::max(0, c.degree()));
      for (const Cylinder& child : refine_cylinder(c, target - c.alpha.length(), n_))
        out[child] += v;
    }
    return out;
  }

  static void subtract_scaled(std::map<Cylinder, ComplexQ>& v, const ComplexQ& factor,
                              const std::map<Cylinder, ComplexQ>& row) {
    for (const auto& [c, rv] : row) {
      auto [it, fresh] = v.try_emplace(c, ComplexQ(0));
      it->second -= factor * rv;
      if (it->second.is_zero()) v.erase(it);
    }
  }

  void insert(std::map<Cylinder, ComplexQ> v) {
    while (!v.empty()) {
      auto pivot = v.begin();
      auto it = rows_.find(pivot->first);
      if (it == rows_.end()) {
        ComplexQ lead = pivot->second;
        for (auto& [c, val] : v) val = val / lead;
        Cylinder key = v.begin()->first;
        rows_.emplace(std::move(key), std::move(v));
        return;
      }
      ComplexQ factor = pivot->second;  // copy: the pivot node dies first
      subtract_scaled(v, factor, it->second);
    }
  }

  int n_;
  std::size_t depth_;
  std::map<Cylinder, std::map<Cylinder, ComplexQ>> rows_;  // pivot -> normalized row
};

// Membership of candidate in the algebraic bimodule generated by the
// family over the diagonal, truncated at depth.  Sound and complete for
// the truncation; monotone in depth.
inline bool bimodule_contains(const std::vector<AlgebraElement>& generators,
                              const AlgebraElement& candidate, std::size_t depth) {
  return BimoduleSpan(generators, depth).contains(candidate);
}

// A generated bimodule equals the full support algebra of its spectrum
// iff the indicator of every support cylinder already lies inside.  On
// failure the offending cylinder is returned.
inline std::pair<bool, std::optional<Cylinder>> reflexivity_check(
    const std::vector<AlgebraElement>& generators, std::size_t depth) {
  BimoduleSpan span(generators, depth);
  SpectralSet spectrum = sigma(generators);
  for (const Cylinder& c : spectrum.cylinders()) {
    if (!span.contains(AlgebraElement::cuntz_pi(span.n(), c))) return {false, c};
  }
  return {true, std::nullopt};
}

// Invariance under the gauge action: every degree component of every
// generator stays inside the bimodule.
inline bool is_gauge_invariant(const std::vector<AlgebraElement>& generators,
                               std::size_t depth) {
  BimoduleSpan span(generators, depth);
  for (const AlgebraElement& g : generators)
    for (int k : degrees(g))
      if (!span.contains(fourier_component(g, k))) return false;
  return true;
}

}  // namespace cuntz
