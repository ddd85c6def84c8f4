#include <catch2/catch_amalgamated.hpp>

#include "cuntz/spectral.hpp"
#include "support.hpp"

using namespace cuntz;

namespace {

AlgebraElement chi(int n, std::initializer_list<int> a, std::initializer_list<int> b) {
  return AlgebraElement::cuntz_pi(n, Cylinder{Word(a), Word(b)});
}

const Point kOnes = constant_point(1);

}  // namespace

TEST_CASE("point membership in named sets") {
  int n = 2;
  GroupoidElement g = make_element(kOnes, 0, Point(Word{2}, Word{1}));
  CHECK(point_in_named(NamedSet::Q_REF, g, n));
  CHECK_FALSE(point_in_named(NamedSet::Q_ST, g, n));
  // The standard order favors the larger last differing letter.
  CHECK(point_in_named(NamedSet::Q_ST, inverse(g), n));

  testsupport::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Point x = rng.point(n);
    CHECK(point_in_named(NamedSet::D0, make_element(x, 0, x), n));
  }

  GroupoidElement s1 = make_element(kOnes, 1, kOnes);
  CHECK(point_in_named(NamedSet::P_PLUS, s1, n));
  CHECK_FALSE(point_in_named(NamedSet::P_UHF, s1, n));
}

TEST_CASE("standard order membership matches the standard cocycle sign") {
  testsupport::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.pick_n();
    Word w1 = rng.word(n, 3);
    Word w2 = rng.word(n, static_cast<int>(w1.length()), static_cast<int>(w1.length()));
    Point gamma = rng.point(n, 2, 2);
    GroupoidElement g = make_element(prepend(w1, gamma), 0, prepend(w2, gamma));
    Rational d = 0;
    Rational weight = 1;
    for (std::size_t i = 1; i < g.tail_index(); ++i) {
      d += weight * Rational(g.x().letter(i) - g.y().letter(i));
      weight *= n;
    }
    CHECK(point_in_named(NamedSet::Q_ST, g, n) == (d >= 0));
  }
}

TEST_CASE("sigma examples") {
  int n = 2;
  AlgebraElement s1 = AlgebraElement::generator(n, 1);
  CHECK(sigma({s1}).cylinders() == std::set<Cylinder>{Cylinder{Word{1}, Word{}}});
  AlgebraElement f = add(AlgebraElement::identity(n), s1);
  CHECK(sigma({f}).cylinders() ==
        std::set<Cylinder>{Cylinder{Word{}, Word{}}, Cylinder{Word{1}, Word{}}});
  CHECK(sigma({AlgebraElement::zero(n)}).cylinders().empty());
}

TEST_CASE("sigma of the indicator family of a cylinder union recovers the union") {
  testsupport::Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.pick_n();
    SpectralSet p(n);
    std::vector<AlgebraElement> indicators;
    int parts = rng.uniform(1, 4);
    for (int i = 0; i < parts; ++i) {
      Cylinder c = rng.cylinder(n, 3);
      p.insert(c);
      indicators.push_back(AlgebraElement::cuntz_pi(n, c));
    }
    CHECK(same_cylinder_union(sigma(indicators), p));
  }
}

TEST_CASE("supported_in examples") {
  int n = 2;
  SpectralSet d0(n, {}, {NamedSet::D0});
  CHECK(supported_in(AlgebraElement::identity(n), d0));

  SpectralSet pplus(n, {}, {NamedSet::P_PLUS});
  CHECK(supported_in(AlgebraElement::generator(n, 1), pplus));
  CHECK_FALSE(supported_in(adjoint(AlgebraElement::generator(n, 1)), pplus));

  SpectralSet pv(n, {}, {NamedSet::P_V});
  CHECK(supported_in(chi(n, {1}, {2}), pv));
  CHECK_FALSE(supported_in(chi(n, {2}, {1}), pv));
}

TEST_CASE("support algebras are bimodules over the diagonal") {
  testsupport::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.pick_n();
    SpectralSet p(n);
    std::vector<std::pair<Cylinder, ComplexQ>> raw;
    for (int i = 0; i < 3; ++i) {
      Cylinder c = rng.cylinder(n, 2);
      p.insert(c);
      if (rng.uniform(0, 1)) raw.emplace_back(c, rng.coefficient());
    }
    AlgebraElement a = AlgebraElement::from_terms(n, std::move(raw));
    AlgebraElement diag = rng.diagonal_element(n);
    CHECK(supported_in(a, p));
    CHECK(supported_in(mul(diag, a), p));
    CHECK(supported_in(mul(a, diag), p));
  }
}

TEST_CASE("bimodule_contains examples") {
  int n = 2;
  AlgebraElement f = add(AlgebraElement::identity(n), AlgebraElement::generator(n, 1));
  CHECK_FALSE(bimodule_contains({f}, AlgebraElement::identity(n), 3));
  CHECK(bimodule_contains({f}, chi(n, {2}, {2}), 2));

  testsupport::Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement a = rng.nonzero_algebra_element(n, 3, 2);
    CHECK(bimodule_contains({a}, a, 3));
  }

  CHECK_THROWS_AS(bimodule_contains({chi(n, {1, 2}, {})}, AlgebraElement::identity(n), 1),
                  DepthTooSmall);
}

TEST_CASE("reflexivity_check examples") {
  int n = 2;
  auto [ok1, w1] = reflexivity_check({chi(n, {1}, {2})}, 3);
  CHECK(ok1);
  CHECK_FALSE(w1.has_value());

  AlgebraElement f = add(AlgebraElement::identity(n), AlgebraElement::generator(n, 1));
  auto [ok2, w2] = reflexivity_check({f}, 3);
  CHECK_FALSE(ok2);
  REQUIRE(w2.has_value());
  CHECK(*w2 == Cylinder{Word{}, Word{}});

  auto [ok3, w3] = reflexivity_check({AlgebraElement::identity(n)}, 2);
  CHECK(ok3);
  CHECK_FALSE(w3.has_value());
}

TEST_CASE("gauge invariance examples") {
  int n = 2;
  AlgebraElement f = add(AlgebraElement::identity(n), AlgebraElement::generator(n, 1));
  CHECK_FALSE(is_gauge_invariant({f}, 3));
  CHECK(is_gauge_invariant({AlgebraElement::generator(n, 1)}, 2));
  AlgebraElement two_pi = add(chi(n, {1}, {1}), chi(n, {1, 2}, {2, 1}));
  CHECK(is_gauge_invariant({two_pi}, 3));
}

TEST_CASE("reflexivity coincides with gauge invariance on generated bimodules") {
  testsupport::Rng rng(36);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2;
    std::vector<AlgebraElement> gens;
    int count = rng.uniform(1, 2);
    for (int i = 0; i < count; ++i) gens.push_back(rng.nonzero_algebra_element(n, 2, 2));
    CHECK(reflexivity_check(gens, 4).first == is_gauge_invariant(gens, 4));
  }
  // Families of Cuntz partial isometries generate reflexive bimodules.
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.pick_n();
    std::vector<AlgebraElement> gens;
    int count = rng.uniform(1, 3);
    for (int i = 0; i < count; ++i)
      gens.push_back(AlgebraElement::cuntz_pi(n, rng.cylinder(n, 2)));
    auto [ok, witness] = reflexivity_check(gens, 3);
    CHECK(ok);
    CHECK(is_gauge_invariant(gens, 3));
  }
}

TEST_CASE("accepted indicators stay accepted under refinement") {
  testsupport::Rng rng(37);
  int n = 2;
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<AlgebraElement> gens{rng.nonzero_algebra_element(n, 2, 2)};
    BimoduleSpan span(gens, 4);
    SpectralSet spectrum = sigma(gens);
    for (const Cylinder& c : spectrum.cylinders()) {
      if (!span.contains(AlgebraElement::cuntz_pi(n, c))) continue;
      for (const Cylinder& child : refine_cylinder(c, 1, n))
        CHECK(span.contains(AlgebraElement::cuntz_pi(n, child)));
    }
  }
}

TEST_CASE("spectral set text round trip") {
  int n = 2;
  SpectralSet s(n, {Cylinder{Word{1}, Word{}}}, {NamedSet::D0});
  CHECK(spectral_set_to_string(s) == "D0 + U[[1]|[]]");
  SpectralSet parsed = parse_spectral_set("D0 + U[[1]|[]]", n);
  CHECK(parsed.cylinders() == s.cylinders());
  CHECK(parsed.named() == s.named());
  CHECK_THROWS(parse_spectral_set("D0 + bogus", n));
}
