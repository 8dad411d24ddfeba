#include <doctest.h>

#include "generators.hpp"
#include "ordcx/band.hpp"

using namespace ordcx;

TEST_CASE("finite-model bands from masks") {
  const Band b = Band::from_mask({true, false, true});
  CHECK(b.contains(0));
  CHECK_FALSE(b.contains(1));
  CHECK(b.indices() == std::vector<std::size_t>{0, 2});
  CHECK(b.to_string() == "{0,2}");
  CHECK(b.complement().to_string() == "{1}");
  CHECK(Band::full(Model::finite(3)).is_full());
  CHECK(Band::empty(Model::finite(3)).is_empty());
  CHECK(Band::empty(Model::finite(2)).to_string() == "{}");
}

TEST_CASE("sequence-model bands are finite or cofinite") {
  const Band f = Band::finite_set({1, 4});
  const Band c = Band::cofinite_set({1});
  CHECK(f.to_string() == "{1,4}");
  CHECK(c.to_string() == "N\\{1}");
  CHECK(c.contains(1000000));
  CHECK_FALSE(c.contains(1));
  CHECK(f.complement() == Band::cofinite_set({1, 4}));
  CHECK(f.intersect(c) == Band::finite_set({4}));
  CHECK(f.unite(c) == Band::full(Model::sequence()));
  CHECK_THROWS_AS(c.indices(), std::logic_error);
}

TEST_CASE("support of sequence elements") {
  const RealElement x = RealElement::sequence({0, 2, 0}, 1);
  CHECK(Band::support_of(x) == Band::cofinite_set({0, 2}));
  const RealElement y = RealElement::sequence({3, 0, 5}, 0);
  CHECK(Band::support_of(y) == Band::finite_set({0, 2}));
}

TEST_CASE("projection zeroes the complement") {
  const Band b = Band::from_mask({true, false});
  CHECK(b.project(ComplexElement::finite({Complex(1, 1), Complex(2, 0)})) ==
        ComplexElement::finite({Complex(1, 1), Complex(0)}));
  const Band c = Band::cofinite_set({0});
  CHECK(c.project(RealElement::sequence({7, 8}, 9)) == RealElement::sequence({0, 8}, 9));
  CHECK(Band::finite_set({2}).project(RealElement::sequence({}, 5)) == RealElement::sequence({0, 0, 5}, 0));
}

TEST_CASE("projections are multiplicative lattice homomorphisms on samples") {
  gen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mask_src = g.real_element(6, 1.0, 0.4);
    const Band b = Band::support_of(mask_src);
    const auto x = g.real_element(6), y = g.real_element(6);
    CHECK(b.project(x * y) == x * b.project(y));
    CHECK(b.project(sup(x, y)) == sup(b.project(x), b.project(y)));
    CHECK(b.project(inf(x, y)) == inf(b.project(x), b.project(y)));
    CHECK(b.project(b.project(x)) == b.project(x));
    CHECK(b.project(x) + b.complement().project(x) == x);
  }
}

TEST_CASE("band algebra laws on generated sequence bands") {
  gen::Gen g(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Band a = Band::support_of(g.exact_sequence());
    const Band b = Band::support_of(g.exact_sequence());
    CHECK(a.complement().complement() == a);
    CHECK(a.intersect(a.complement()).is_empty());
    CHECK(a.unite(a.complement()).is_full());
    CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
    for (std::size_t k = 0; k < 12; ++k) {
      CHECK(a.intersect(b).contains(k) == (a.contains(k) && b.contains(k)));
      CHECK(a.unite(b).contains(k) == (a.contains(k) || b.contains(k)));
    }
  }
}
