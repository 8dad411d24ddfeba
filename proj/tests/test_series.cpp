#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "ordcx/diffcheck.hpp"
#include "ordcx/errors.hpp"
#include "ordcx/literal.hpp"

using namespace ordcx;

namespace {

ComplexElement zero(std::size_t d) { return ComplexElement::zero(Model::finite(d)); }

}  // namespace

TEST_CASE("geometric series at half the unit") {
  const auto fam = CoefficientFamily::uniform(3, CoordinateFamily::geometric(1));
  const auto rep = series_derivative_check(fam, zero(3), ComplexElement::constant(Model::finite(3), 0.5));
  CHECK(rep.pass());
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(rep.f_value[k] - 2.0) < 1e-9);
    CHECK(std::abs(rep.g_value[k] - 4.0) < 1e-9);
  }
  CHECK(rep.comparison_radius == RealElement::constant(Model::finite(3), 0.75));
  // sum k(k-1) r^(k-2) = 2 / (1 - r)^3 at r = 3/4
  CHECK(rep.second_order_sum[0] == doctest::Approx(128).epsilon(1e-9));
}

TEST_CASE("the exponential series is its own derivative") {
  const auto fam = CoefficientFamily::uniform(2, CoordinateFamily::inverse_factorial());
  gen::Gen g(131);
  for (int i = 0; i < 10; ++i) {
    const auto c = g.complex_element(2, 1.0);
    const auto z0 = c + g.complex_element(2, 2.0);
    const auto rep = series_derivative_check(fam, c, z0);
    CHECK(rep.pass());
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(std::abs(rep.g_value[k] - rep.f_value[k]) < 1e-9 * std::abs(rep.f_value[k]));
      CHECK(std::abs(rep.f_value[k] - std::exp(z0[k] - c[k])) < 1e-9 * std::abs(rep.f_value[k]));
    }
  }
}

TEST_CASE("points outside the open disk of convergence") {
  const auto geo = CoefficientFamily::uniform(2, CoordinateFamily::geometric(1));
  CHECK_THROWS_AS(series_derivative_check(geo, zero(2), ComplexElement::finite({0.5, 1})), OutsideOpenDisk);
  CHECK_THROWS_AS(series_derivative_check(geo, zero(2), ComplexElement::finite({0.5, 2})), OutsideOpenDisk);
  const CoefficientFamily fact({CoordinateFamily::factorial(), CoordinateFamily::geometric(1)});
  CHECK_THROWS_AS(series_derivative_check(fact, zero(2), zero(2)), OutsideOpenDisk);
}

TEST_CASE("term-by-term derivative examples") {
  const auto d = series_derivative(CoefficientFamily({CoordinateFamily::geometric(1), CoordinateFamily::geometric(0.5)}));
  for (std::size_t n = 0; n < 20; ++n) {
    CHECK(d[0].coefficient(n) == Complex(double(n + 1)));
    CHECK(d[1].coefficient(n) == Complex(double(n + 1) * std::ldexp(1.0, -int(n + 1))));
  }
  const auto t = series_derivative(CoefficientFamily({CoordinateFamily::zero().with_table({5, 1, 2})}));
  CHECK(t[0].coefficient(0) == Complex(1));
  CHECK(t[0].coefficient(1) == Complex(4));
  CHECK(t[0].coefficient(2) == Complex(0));
}

TEST_CASE("series checks pass inside the disk for generated families") {
  gen::Gen g(132);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto fam = g.family(3);
    const auto rho = cauchy_hadamard(fam).rho;
    bool usable = true;
    std::vector<Complex> z(3);
    for (std::size_t k = 0; k < 3; ++k) {
      if (rho[k] == 0) usable = false;
      const double R = std::isinf(rho[k]) ? 1.0 : rho[k];
      z[k] = std::polar(g.uniform(0, 0.9) * R, g.uniform(0, 2 * M_PI));
    }
    if (!usable) continue;
    ++checked;
    const auto rep = series_derivative_check(fam, zero(3), ComplexElement::finite(z));
    CAPTURE(format_family(fam));
    CAPTURE(rep.check.failure);
    CAPTURE(rep.second_order_converges);
    CAPTURE(rep.bound_ok);
    CAPTURE(rep.terms);
    CAPTURE(format_element(ComplexElement::finite(z)));
    CHECK(rep.pass());
    // the series of the derivative family agrees with the reported derivative value
    const auto direct = evaluate_series(series_derivative(fam), zero(3), ComplexElement::finite(z));
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(std::abs(direct.value[k] - rep.g_value[k]) <= 1e-9 * (1 + std::abs(rep.g_value[k])));
  }
  CHECK(checked > 50);
}

TEST_CASE("power series are holomorphic on their disk of convergence") {
  const CoefficientFamily fam({CoordinateFamily::geometric(1), CoordinateFamily::inverse_factorial()});
  const auto c = ComplexElement::finite({0, Complex(1, 1)});
  const auto rep = holomorphy_report(fam, c, OrderDisk::open_disk(c, ExtendedPositive({1, kInf})));
  CHECK(rep.pass());
  CHECK(rep.samples == 25);
}
