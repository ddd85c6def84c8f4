#include <catch2/catch_amalgamated.hpp>

#include "cuntz/groupoid.hpp"
#include "support.hpp"

using namespace cuntz;

namespace {
const Point kOnes = constant_point(1);
}

TEST_CASE("make_element examples") {
  GroupoidElement a = make_element(kOnes, 1, kOnes);
  CHECK(a.tail_index() == 1);

  GroupoidElement b = make_element(kOnes, 0, Point(Word{2}, Word{1}));
  CHECK(b.tail_index() == 2);

  CHECK_THROWS_AS(make_element(kOnes, 0, constant_point(2)), NotInGroupoid);

  Point alt(Word{}, Word{1, 2});
  CHECK_NOTHROW(make_element(alt, 2, alt));
  CHECK_THROWS_AS(make_element(alt, 1, alt), NotInGroupoid);
}

TEST_CASE("compose examples") {
  GroupoidElement s = make_element(kOnes, 1, kOnes);
  CHECK(compose(s, s) == make_element(kOnes, 2, kOnes));

  testsupport::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    GroupoidElement g = rng.element(rng.pick_n());
    CHECK(compose(g, inverse(g)) == make_element(g.x(), 0, g.x()));
  }

  GroupoidElement u = make_element(kOnes, 0, Point(Word{2}, Word{1}));
  GroupoidElement v = make_element(Point(Word{2}, Word{1}), 1, kOnes);
  CHECK(compose(u, v) == make_element(kOnes, 1, kOnes));

  CHECK_THROWS_AS(compose(v, v), NotComposable);
}

TEST_CASE("inverse examples") {
  CHECK(inverse(make_element(kOnes, 1, kOnes)) == make_element(kOnes, -1, kOnes));
  GroupoidElement unit = make_element(kOnes, 0, kOnes);
  CHECK(inverse(unit) == unit);

  testsupport::Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    GroupoidElement g = rng.element(rng.pick_n());
    GroupoidElement gg = inverse(inverse(g));
    CHECK(gg == g);
    CHECK(gg.tail_index() == g.tail_index());
  }
}

TEST_CASE("groupoid laws on random data") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.pick_n();
    auto [g, h] = rng.composable_pair(n);
    GroupoidElement third = [&] {
      cuntz::Point mid = h.y();
      cuntz::Word beta = rng.word(n, 4);
      auto drop = static_cast<std::size_t>(rng.uniform(0, 3));
      return make_element(mid, static_cast<int>(drop) - static_cast<int>(beta.length()),
                          prepend(beta, shift(mid, drop)));
    }();
    CHECK(compose(compose(g, h), third) == compose(g, compose(h, third)));
    // Units.
    CHECK(compose(g, domain_unit(g)) == g);
    CHECK(compose(range_unit(g), g) == g);
  }
}

TEST_CASE("in_cylinder examples") {
  GroupoidElement s = make_element(kOnes, 1, kOnes);
  CHECK(in_cylinder(s, Cylinder{Word{1}, Word{}}));
  CHECK_FALSE(in_cylinder(s, Cylinder{Word{2}, Word{}}));

  GroupoidElement g = make_element(Point(Word{1, 2}, Word{1}), 1, Point(Word{2}, Word{1}));
  CHECK(in_cylinder(g, Cylinder{Word({1, 2}), Word{2}}));
}

TEST_CASE("neighborhood basis at an element") {
  testsupport::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.pick_n();
    GroupoidElement g = rng.element(n);
    const int k = g.k();
    auto basic = [&](std::size_t j) {
      std::vector<int> a, b;
      for (long i = 1; i <= static_cast<long>(j) + k; ++i)
        a.push_back(g.x().letter(static_cast<std::size_t>(i)));
      for (std::size_t i = 1; i <= j; ++i) b.push_back(g.y().letter(i));
      return Cylinder{Word(a), Word(b)};
    };
    auto start = static_cast<std::size_t>(
        std::max<long>(static_cast<long>(g.tail_index()), -k));
    for (std::size_t j = start; j <= g.tail_index() + 3; ++j)
      CHECK(in_cylinder(g, basic(j)));
    // A different element falls outside some basic neighborhood.
    GroupoidElement h = rng.element(n);
    if (h == g) continue;
    bool excluded = false;
    std::size_t bound = start + first_difference_bound(g.x(), h.x()) +
                        first_difference_bound(g.y(), h.y()) + 8;
    for (std::size_t j = start; j <= bound && !excluded; ++j)
      if (!in_cylinder(h, basic(j))) excluded = true;
    CHECK(excluded);
  }
}

TEST_CASE("refine_cylinder partitions a cylinder") {
  CHECK(refine_cylinder(Cylinder{Word{}, Word{}}, 1, 2) ==
        std::vector<Cylinder>{Cylinder{Word{1}, Word{1}}, Cylinder{Word{2}, Word{2}}});
  CHECK(refine_cylinder(Cylinder{Word{1}, Word{}}, 1, 2) ==
        std::vector<Cylinder>{Cylinder{Word({1, 1}), Word{1}}, Cylinder{Word({1, 2}), Word{2}}});
  Cylinder c{Word{2}, Word{1}};
  CHECK(refine_cylinder(c, 0, 2) == std::vector<Cylinder>{c});

  testsupport::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.pick_n();
    Cylinder base = rng.cylinder(n, 2);
    int m = rng.uniform(0, 3);
    auto children = refine_cylinder(base, static_cast<std::size_t>(m), n);
    GroupoidElement g = rng.element_in(base, n);
    int hits = 0;
    for (const Cylinder& child : children)
      if (in_cylinder(g, child)) ++hits;
    CHECK(hits == 1);
    for (const Cylinder& child : children) CHECK(child.degree() == base.degree());
  }
}

TEST_CASE("groupoid element text round trip") {
  GroupoidElement g = make_element(Point(Word{1, 2}, Word{1}), 1, Point(Word{2}, Word{1}));
  CHECK(parse_element(element_to_string(g)) == g);
  CHECK(parse_cylinder("U[[1,2]|[2]]") == Cylinder{Word({1, 2}), Word{2}});
  CHECK(cylinder_to_string(Cylinder{Word({1, 2}), Word{2}}) == "U[[1,2]|[2]]");
}
