#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "ordcx/diffcheck.hpp"
#include "ordcx/errors.hpp"
#include "ordcx/lattice.hpp"

using namespace ordcx;

TEST_CASE("z^2 at e: the residual ratio is |h| and halves exactly") {
  const auto e = ComplexElement::unit(Model::finite(2));
  const auto rep = difference_quotient_check(parse_expr("z^2"), e, RealElement::unit(Model::finite(2)), 30);
  CHECK(rep.pass());
  CHECK(rep.continuity);
  REQUIRE(rep.directions.size() == 4);
  for (const auto& d : rep.directions)
    for (unsigned k = 1; k <= 30; ++k) CHECK(d.ratios[k - 1] == RealElement::constant(Model::finite(2), std::ldexp(1.0, -int(k))));
  CHECK(rep.derivative == ComplexElement::constant(Model::finite(2), 2));
}

TEST_CASE("constants have zero residuals") {
  const auto c = ComplexElement::finite({Complex(1, 2), -3});
  const auto rep = difference_quotient_check(parse_expr("[5, 2i]"), c);
  CHECK(rep.pass());
  for (const auto& d : rep.directions)
    for (const auto& r : d.ratios) CHECK(is_zero(r));
}

TEST_CASE("inv(z) at 2e stays below 2|h| |c|^-3") {
  const auto c = ComplexElement::constant(Model::finite(3), 2);
  const auto r = RealElement::constant(Model::finite(3), 0.5);  // |c|/4
  const auto rep = difference_quotient_check(parse_expr("inv(z)"), c, r, 30);
  CHECK(rep.pass());
  for (const auto& d : rep.directions)
    for (unsigned k = 1; k <= 30; ++k) {
      const double h = 0.5 / std::ldexp(1.0, int(k));
      for (std::size_t s = 0; s < 3; ++s) CHECK(d.ratios[k - 1][s] <= 2 * h / 8 * (1 + 1e-12));
    }
}

TEST_CASE("default radius") {
  // f' = -1/4, f'' = 1/4 at z = 2: 1e-3 / 1.5; the inverted argument z gives 2 / 8
  const auto r = default_check_radius(parse_expr("inv(z)"), ComplexElement::constant(Model::finite(2), 2));
  CHECK(r[0] == doctest::Approx(1e-3 / 1.5).epsilon(1e-15));
  CHECK(r[1] == r[0]);
  const auto q = default_check_radius(parse_expr("inv(z - 1.999)"), ComplexElement::finite({2}));
  CHECK(q[0] <= 0.001 / 4);
  const auto rep = difference_quotient_check(parse_expr("inv(z - 1.999)"), ComplexElement::finite({2}));
  CHECK(rep.pass());
}

TEST_CASE("wrong derivatives are caught") {
  const auto e = ComplexElement::unit(Model::finite(2));
  const auto rep = difference_quotient_check(parse_expr("z^2"), parse_expr("3*z"), e);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.below_tol);
  CHECK_FALSE(rep.failure.empty());
  const auto text = format_check_report(rep);
  CHECK(text.find("FAIL\n") != std::string::npos);
}

TEST_CASE("domain and radius errors") {
  CHECK_THROWS_AS(difference_quotient_check(parse_expr("inv(z)"), ComplexElement::finite({1, 0})), OutsideDomain);
  CHECK_THROWS_AS(difference_quotient_check(parse_expr("z"), ComplexElement::finite({1, 1}), RealElement::finite({1, 0})),
                  InvalidRadius);
  CHECK_THROWS_AS(difference_quotient_check(parse_expr("z"), ComplexElement::finite({1}), RealElement::finite({1, 1})),
                  ModelMismatch);
}

TEST_CASE("sequence-model points") {
  const auto c = ComplexElement::sequence({1, Complex(0, 1)}, 4);
  const auto rep = difference_quotient_check(parse_expr("inv(z) + z^3"), c);
  CHECK(rep.pass());
  CHECK(rep.derivative == ComplexElement::sequence({2, -2}, 48 - 1.0 / 16));
}

TEST_CASE("random expressions pass the check with their symbolic derivative") {
  gen::Gen g(121);
  for (int trial = 0; trial < 100; ++trial) {
    const Expr f = g.expr(5);
    std::vector<Complex> zs(8);
    for (auto& x : zs) x = g.complex_annulus(0.5, 1);
    const auto rep = difference_quotient_check(f, ComplexElement::finite(zs));
    CAPTURE(to_string(f));
    CAPTURE(rep.failure);
    CHECK(rep.pass());
    CHECK(rep.continuity);
  }
}

TEST_CASE("holomorphy on disks") {
  const auto c = ComplexElement::constant(Model::finite(2), 2);
  const auto rep = holomorphy_report(parse_expr("inv(z) + z^2"), OrderDisk::open_disk(c, RealElement::unit(Model::finite(2))));
  CHECK(rep.pass());
  CHECK(rep.samples == 25);
  CHECK_FALSE(rep.first_failure);
  for (const auto& z : rep.points)
    CHECK(disk_membership(z, OrderDisk::open_disk(c, RealElement::unit(Model::finite(2)))));
  CHECK(sample_disk(OrderDisk::open_disk(c, ExtendedPositive({kInf, 1})), 5, 7) ==
        sample_disk(OrderDisk::open_disk(c, ExtendedPositive({kInf, 1})), 5, 7));
}

TEST_CASE("super differentiability witnesses") {
  const std::function<ExactElement(const ExactElement&)> sq = [](const ExactElement& z) { return z * z; };
  const auto c = ExactElement::unit(Model::sequence());
  const auto fc = ExactElement::constant(Model::sequence(), Rational(2));
  const std::vector<ExactElement> hs{ExactElement::sequence({0, 1}, 0), ExactElement::sequence({}, Rational(1, 3))};
  CHECK_FALSE(super_check(sq, c, fc, hs).refuted);
  // a map that changes where h vanishes defeats every regulator
  const std::function<ExactElement(const ExactElement&)> jump = [](const ExactElement& z) {
    return z[0] == Rational(1) ? z : z + ExactElement::sequence({0, 1}, 0);
  };
  const auto r = super_check(jump, c, ExactElement::unit(Model::sequence()), {ExactElement::sequence({1}, 0)});
  CHECK(r.refuted);
  CHECK(r.coordinate == 1);
}
