#include <doctest.h>

#include "generators.hpp"
#include "ordcx/counterexamples.hpp"
#include "ordcx/errors.hpp"
#include "ordcx/lattice.hpp"
#include "ordcx/literal.hpp"

using namespace ordcx;

namespace {

using G = GaussianRational;

ExactElement seq(std::vector<Rational> prefix, Rational tail) { return ExactElement::sequence(std::move(prefix), tail); }

// positive exact sequence with every coordinate in [1/12, 20]
ExactElement positive_sequence(gen::Gen& g) {
  std::vector<Rational> p(std::size_t(g.integer(0, 6)));
  for (auto& x : p) x = Rational(g.integer(1, 240), 12);
  return seq(p, Rational(g.integer(1, 240), 12));
}

}  // namespace

TEST_CASE("shift map") {
  const auto small = seq({Rational(1, 2), Rational(-1, 3)}, Rational(1, 4));
  CHECK(shift_map(small) == small);
  CHECK(shift_map(seq({0, 5, 7}, 1)) == seq({5, 7}, 1));
  CHECK(shift_map(seq({1, 0}, 0)) == seq({0}, 0));
  CHECK(shift_map(ExactElement::zero(Model::sequence())) == ExactElement::zero(Model::sequence()));
}

TEST_CASE("shift witnesses defeat every regulator") {
  CHECK(shift_witness_direction(3) == seq({0, 0, 0}, 2));
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto w = shift_witness(n);
    CHECK(w.refuted);
    CHECK(w.coordinate == n - 1);
    REQUIRE(w.residual);
    // f(h) - f(0) - e h = S h - h = 2 delta_{n-1}
    std::vector<Rational> delta(n, Rational(0));
    delta[n - 1] = 2;
    CHECK(*w.residual == seq(delta, 0));
    CHECK(shift_witness_direction(n)[n - 1] == Rational(0));
  }
  CHECK(shift_witness(10).coordinate == 9);
  CHECK_THROWS(shift_witness(0));
}

TEST_CASE("the swap has no derivative at zero") {
  const GaussianElement zero = GaussianElement::zero(Model::finite(2));
  const GaussianElement z = GaussianElement::finite({G(Rational(1, 2), Rational(1)), G(3)});
  CHECK(swap_map(z) == GaussianElement::finite({G(3), G(Rational(1, 2), Rational(1))}));
  CHECK(swap_map(swap_map(z)) == z);
  CHECK_THROWS_AS(swap_map(GaussianElement::finite({G(1)})), ModelMismatch);

  gen::Gen g(141);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianElement f0 = GaussianElement::finite({G(g.rational(), g.rational()), G(g.rational(), g.rational())});
    const Rational t = g.rational();
    if (t == Rational(0)) continue;
    const auto w = swap_witness(f0, {GaussianElement::finite({G(t), G(0)})});
    CHECK(w.refuted);
    CHECK(w.coordinate == 1);
    CHECK((*w.residual)[1] == G(t));
    const auto v = swap_witness(f0, {GaussianElement::finite({G(0), G(t)})});
    CHECK(v.refuted);
    CHECK(v.coordinate == 0);
  }
  CHECK_FALSE(swap_witness(zero, {GaussianElement::finite({G(1), G(1)})}).refuted);
  CHECK(format_gaussian(G(Rational(1, 2), Rational(-3))) == "1/2-3i");
}

TEST_CASE("the net f_{k,l} and the regulator g_k") {
  CHECK(f_kl(2, 3) == seq({1, 1}, Rational(1, 3)));
  CHECK(f_kl(0, 1) == ExactElement::unit(Model::sequence()));
  CHECK(g_k(2) == seq({0, 0}, 1));
  CHECK_THROWS(f_kl(1, 0));
  // |f_{k,l} - e| <= g_k for every l
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t l = 1; l < 6; ++l) CHECK(leq(modulus_of(f_kl(k, l) - ExactElement::unit(Model::sequence())), g_k(k)));
}

TEST_CASE("inverses of the net escape every bound") {
  const auto w = fkl_unbounded_witness(seq({}, 5), 0, 0);
  CHECK(w.l == 6);
  CHECK(w.index == 1);
  CHECK(w.value == Rational(6));
  CHECK(w.bound == Rational(5));

  gen::Gen g(142);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = positive_sequence(g);
    const std::size_t k0 = std::size_t(g.integer(0, 8)), l0 = std::size_t(g.integer(0, 8));
    const auto x = fkl_unbounded_witness(u, k0, l0);
    CAPTURE(format_element(u));
    CHECK(x.k >= k0);
    CHECK(x.l >= l0);
    // independent recomputation of the inverse coordinate
    const auto inv = inverse(f_kl(x.k, x.l));
    CHECK(inv[x.index] == x.value);
    CHECK(u[x.index] == x.bound);
    CHECK(x.bound < x.value);
  }
}

TEST_CASE("sequence inversion is not sigma-order continuous") {
  gen::Gen g(143);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = positive_sequence(g);
    const std::size_t K = std::size_t(g.integer(0, 10));
    const auto x = linf_witness(u, K);
    CHECK(x.k > K);
    CHECK(x.k == x.l);
    CHECK(inverse(f_kl(x.k, x.k))[x.index] == x.value);
    CHECK(u[x.index] < x.value);
  }
}

TEST_CASE("inversion is sigma-order continuous in a finite model") {
  const auto c = finite_inversion_contrast();
  CHECK(c.converges);
  CHECK(c.bounded);
  CHECK(c.checked > 0);
  CHECK(c.bound.model() == Model::finite(8));
  CHECK(finite_inversion_contrast(3, 40).converges);
  CHECK_THROWS_AS(finite_inversion_contrast(3, 16), DepthTooSmall);
}

TEST_CASE("strict inequality does not give an open disk") {
  const auto p = disk_witness(ExactElement::finite({Rational(1, 5), Rational(1, 5)}));
  CHECK(p == ExactElement::finite({Rational(11, 10), 0}));
  gen::Gen g(144);
  const ExactElement center = ExactElement::finite({1, 0});
  for (int trial = 0; trial < 300; ++trial) {
    const ExactElement s = ExactElement::finite({Rational(g.integer(1, 100), g.integer(1, 100)),
                                                 Rational(g.integer(1, 100), g.integer(1, 100))});
    const auto q = disk_witness(s);
    CHECK(strictly_dominates(s, modulus_of(q - center)));
    CHECK_FALSE(strictly_dominates(ExactElement::unit(Model::finite(2)), modulus_of(q)));
  }
  CHECK_THROWS_AS(disk_witness(ExactElement::finite({1, 0})), InvalidRadius);
  CHECK_THROWS_AS(disk_witness(ExactElement::finite({1})), ModelMismatch);
}

TEST_CASE("runner") {
  CHECK(counterexample_names() == std::vector<std::string>{"shift", "swap", "fkl-net", "linf-sigma", "disk-open"});
  const auto all = run_counterexamples("all");
  REQUIRE(all.size() == 5);
  for (const auto& r : all) {
    CAPTURE(r.name);
    CHECK(r.reproduced);
    CHECK_FALSE(r.witness.empty());
    CHECK(format_counterexample(r).find(r.name + ": REPRODUCED\n") == 0);
  }
  CHECK(run_counterexamples("swap").size() == 1);
  CHECK_THROWS_AS(run_counterexamples("bogus"), std::invalid_argument);
}
