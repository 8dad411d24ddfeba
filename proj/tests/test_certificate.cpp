#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "ordcx/convergence.hpp"
#include "ordcx/errors.hpp"

using namespace ordcx;

namespace {

using RealSeq = std::function<RealElement(std::size_t)>;
using ExactSeq = std::function<ExactElement(std::size_t)>;

std::vector<std::size_t> levels_upto(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= m; ++j) out.push_back(j);
  return out;
}

}  // namespace

TEST_CASE("harmonic decay is certified by the harmonic regulator") {
  const Model m = Model::finite(3);
  const RealSeq z = [m](std::size_t n) { return RealElement::constant(m, 1.0 / double(n + 1)); };
  const ConvergenceCertificate<double> cert{Regulator<double>::harmonic(RealElement::unit(m)),
                                            [](std::size_t k) { return k; }, levels_upto(50)};
  const auto v = verify_certificate(z, RealElement::zero(m), cert, 200);
  CHECK(v.confirmed);
  CHECK_FALSE(v.violation);
  CHECK(v.checked == 51 * 201 - 50 * 51 / 2);
  CHECK(verify_certificate(z, RealElement::zero(m), cert, 400).confirmed);
}

TEST_CASE("an undersized regulator is reported with its first violation") {
  const Model m = Model::finite(2);
  const RealSeq z = [](std::size_t n) { return RealElement::finite({0.0, 1.0 / double(n + 1)}); };
  const ConvergenceCertificate<double> cert{Regulator<double>::harmonic(RealElement::constant(m, 0.5)),
                                            [](std::size_t k) { return k; }, levels_upto(5)};
  const auto v = verify_certificate(z, RealElement::zero(m), cert, 40);
  CHECK_FALSE(v.confirmed);
  REQUIRE(v.violation);
  CHECK(v.violation->level == 0);
  CHECK(v.violation->index == 0);
  CHECK(v.violation->coordinate == 1);
}

TEST_CASE("constant sequences converge under any regulator") {
  gen::Gen g(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = g.real_element(4);
    const RealSeq z = [c](std::size_t) { return c; };
    const ConvergenceCertificate<double> cert{
        Regulator<double>::geometric(g.positive_element(4, 0.1, 1), g.uniform(0.1, 0.9)),
        [](std::size_t) { return std::size_t(0); }, levels_upto(20)};
    CHECK(verify_certificate(z, c, cert, 30).confirmed);
  }
}

TEST_CASE("thresholds beyond the check depth are rejected") {
  const Model m = Model::finite(1);
  const RealSeq z = [m](std::size_t) { return RealElement::zero(m); };
  const ConvergenceCertificate<double> cert{Regulator<double>::harmonic(RealElement::unit(m)),
                                            [](std::size_t k) { return 10 * k; }, levels_upto(5)};
  CHECK_THROWS_AS(verify_certificate(z, RealElement::zero(m), cert, 49), DepthTooSmall);
  CHECK_NOTHROW(verify_certificate(z, RealElement::zero(m), cert, 50));
}

TEST_CASE("shifted unit steps converge to e in the sequence model") {
  // f_k = (1^k | 1/k), |f_k - e| = (0^k | 1 - 1/k) <= g_k
  const Model s = Model::sequence();
  const ExactSeq f = [](std::size_t k) {
    const std::size_t kk = std::max<std::size_t>(k, 1);
    return ExactElement::sequence(std::vector<Rational>(kk, Rational(1)), Rational(1, (long long)kk));
  };
  const ConvergenceCertificate<Rational> cert{Regulator<Rational>::shifted_tail(ExactElement::unit(s)),
                                              [](std::size_t k) { return k; }, levels_upto(30)};
  CHECK(verify_certificate(f, ExactElement::unit(s), cert, 60).confirmed);
  CHECK(verify_certificate(f, ExactElement::unit(s), cert, 120).confirmed);

  // against the zero limit the leading ones escape g_1 at once
  const auto bad = verify_certificate(f, ExactElement::zero(s), cert, 60);
  CHECK_FALSE(bad.confirmed);
  REQUIRE(bad.violation);
  CHECK(bad.violation->level == 1);
  CHECK(bad.violation->index == 1);
  CHECK(bad.violation->coordinate == 0);
}

TEST_CASE("regulators are decreasing with zero infimum") {
  gen::Gen g(72);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = g.positive_element(5, 0.1, 10);
    const auto h = Regulator<double>::harmonic(base);
    const auto q = Regulator<double>::geometric(base, g.uniform(0.05, 0.95));
    for (std::size_t m = 0; m < 40; ++m) {
      CHECK(leq(h.at(m + 1), h.at(m)));
      CHECK(leq(q.at(m + 1), q.at(m)));
    }
    CHECK(leq(h.at(100000), RealElement::constant(Model::finite(5), 1e-4)));
    CHECK(leq(q.at(2000), RealElement::constant(Model::finite(5), 1e-40)));
  }
  const auto t = Regulator<Rational>::shifted_tail(ExactElement::unit(Model::sequence()));
  CHECK(t.at(3) == ExactElement::sequence({0, 0, 0}, 1));
  CHECK(inf(t.at(3), ExactElement::sequence({1, 1, 1}, 0)) == ExactElement::zero(Model::sequence()));
  CHECK_THROWS_AS(Regulator<double>::geometric(RealElement::unit(Model::finite(1)), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Regulator<double>::harmonic(RealElement::finite({1, -1})), std::invalid_argument);
}

TEST_CASE("net certificates over the product order") {
  const Model m = Model::finite(2);
  const std::function<RealElement(std::size_t, std::size_t)> net = [](std::size_t k, std::size_t l) {
    return RealElement::finite({1.0 / double(k + 1), 1.0 / double(l + 1)});
  };
  const auto reg = Regulator<double>::harmonic(RealElement::unit(m));
  const std::function<std::pair<std::size_t, std::size_t>(std::size_t)> thr = [](std::size_t j) {
    return std::pair{j, j};
  };
  CHECK(verify_net_certificate(net, RealElement::zero(m), reg, thr, levels_upto(10), 30).confirmed);
  const std::function<std::pair<std::size_t, std::size_t>(std::size_t)> lazy = [](std::size_t j) {
    return std::pair{j, std::size_t(0)};
  };
  const auto v = verify_net_certificate(net, RealElement::zero(m), reg, lazy, levels_upto(10), 30);
  CHECK_FALSE(v.confirmed);
  REQUIRE(v.violation);
  CHECK(v.violation->level == 1);
  CHECK(v.violation->coordinate == 1);
}

TEST_CASE("limsup examples") {
  const auto alt = limsup_bounded(RealSequence({SequenceTerm::periodic({1, -1}), SequenceTerm::periodic({-1, 1})}));
  CHECK(alt.exact);
  CHECK(alt.value == RealElement::finite({1, 1}));

  const auto harm = limsup_bounded(RealSequence({SequenceTerm::harmonic(0, 1)}));
  CHECK(harm.value == RealElement::finite({0}));

  const auto mixed = limsup_bounded(RealSequence({SequenceTerm::harmonic(2, 1), SequenceTerm::constant(1.0 / 3)}));
  CHECK(mixed.value == RealElement::finite({2, 1.0 / 3}));
  CHECK(mixed.last_delta == RealElement::finite({0, 0}));
}

TEST_CASE("numeric limsup against the periodic maximum") {
  const auto s = limsup_bounded(RealSequence({SequenceTerm::from([](std::size_t n) { return std::sin(double(n)); })}));
  CHECK_FALSE(s.exact);
  CHECK(s.value[0] <= 1);
  CHECK(s.value[0] >= 1 - 1e-4);
  CHECK(s.last_delta[0] < 1e-4);

  const auto d = limsup_bounded(
      RealSequence({SequenceTerm::from([](std::size_t n) { return 3.0 + std::pow(-1.0, double(n)) / double(n + 1); })}));
  CHECK(d.value[0] == doctest::Approx(3.0).epsilon(2e-4));
}

TEST_CASE("limsup raises on unbounded input") {
  CHECK_THROWS_AS(limsup_bounded(RealSequence({SequenceTerm::constant(0), SequenceTerm::from([](std::size_t n) {
                                                 return std::exp(double(n));
                                               })})),
                  Unbounded);
  CHECK_THROWS_AS(limsup_bounded(RealSequence({SequenceTerm::periodic({1, 1e301})})), Unbounded);
  CHECK_THROWS_AS(limsup_bounded(RealSequence({SequenceTerm::constant(1)}), 1), DepthTooSmall);
}

TEST_CASE("limsup of periodic sequences is the maximum of the period") {
  gen::Gen g(73);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> period(std::size_t(g.integer(1, 7)));
    for (auto& v : period) v = g.uniform(-5, 5);
    const auto r = limsup_bounded(RealSequence({SequenceTerm::periodic(period)}), 64);
    // oracle: max over a late window of three periods
    double best = -INFINITY;
    for (std::size_t n = 1000; n < 1000 + 3 * period.size(); ++n) best = std::max(best, period[n % period.size()]);
    CHECK(r.value[0] == best);
  }
}
