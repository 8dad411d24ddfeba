#include "ordcx/diffcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/multiprecision/complex128.hpp>

#include "expr_eval.hpp"
#include "ordcx/lattice.hpp"
#include "ordcx/literal.hpp"

namespace ordcx {

namespace {

using Q = boost::multiprecision::complex128;
using QReal = boost::multiprecision::float128;

Q to_q(Complex c) { return Q(c.real(), c.imag()); }
Complex to_c(const Q& q) { return {static_cast<double>(q.real()), static_cast<double>(q.imag())}; }
bool q_zero(const Q& q) { return q.real() == 0 && q.imag() == 0; }
QReal q_abs(const Q& q) { return boost::multiprecision::abs(q); }

const Complex kDirections[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct QuadProblem {
  Model model = Model::sequence();
  std::size_t slots = 0;
  std::vector<Q> c;
  std::vector<Q> fc;
  std::vector<Q> fprime;
  std::vector<double> r;
  std::function<Q(std::size_t, const Q&)> f;
};

RealElement slots_to_real(const Model& m, std::vector<double> v) { return from_slots(m, std::move(v)); }

ComplexElement slots_to_complex(const Model& m, const std::vector<Q>& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_c(q));
  return from_slots(m, std::move(out));
}

void require_check_radius(const ComplexElement& c, const RealElement& r) {
  require_same_model(c.model(), r.model());
  if (!is_positive(r) || !is_invertible(r)) throw InvalidRadius("check radius must be positive and invertible");
}

DerivativeCheckReport run_check(const QuadProblem& p, unsigned depth, double tol) {
  if (depth < 1) throw std::invalid_argument("check depth must be at least 1");
  DerivativeCheckReport rep;
  rep.point = slots_to_complex(p.model, p.c);
  rep.radius = slots_to_real(p.model, p.r);
  rep.derivative = slots_to_complex(p.model, p.fprime);
  rep.depth = depth;
  rep.tol = tol;
  std::vector<double> worst(p.slots, 0.0);
  for (const Complex lam : kDirections) {
    DirectionTrace tr;
    tr.lambda = lam;
    const Q lq = to_q(lam);
    for (unsigned k = 1; k <= depth; ++k) {
      std::vector<double> ratio(p.slots), disp(p.slots);
      for (std::size_t s = 0; s < p.slots; ++s) {
        const QReal habs = QReal(p.r[s]) / boost::multiprecision::pow(QReal(2), int(k));
        const Q h = lq * Q(habs, 0);
        const Q v = p.f(s, p.c[s] + h);
        ratio[s] = static_cast<double>(q_abs(v - p.fc[s] - h * p.fprime[s]) / habs);
        disp[s] = static_cast<double>(q_abs(v - p.fc[s]));
      }
      tr.ratios.push_back(slots_to_real(p.model, ratio));
      tr.displacements.push_back(slots_to_real(p.model, disp));
      if (k >= 3) {
        const auto& prev = tr.ratios[k - 2];
        const auto& cur = tr.ratios[k - 1];
        for (std::size_t s = 0; s < p.slots; ++s) {
          const double a = slot_value(prev, s, p.slots);
          const double b = slot_value(cur, s, p.slots);
          if (!(b <= a * (1 + 1e-9) + 1e-3 * tol)) {
            if (tr.monotone && rep.failure.empty())
              rep.failure = "ratio increased at step " + std::to_string(k) + ", coordinate " + std::to_string(s) +
                            ", direction " + format_complex(lam);
            tr.monotone = false;
          }
        }
      }
      if (k == depth) {
        for (std::size_t s = 0; s < p.slots; ++s) {
          worst[s] = std::max(worst[s], ratio[s]);
          const double habs = p.r[s] / std::ldexp(1.0, int(k));
          const double bound = habs * (std::abs(to_c(p.fprime[s])) + ratio[s]) * (1 + 1e-9) + 1e-300;
          const double first = slot_value(tr.displacements.front(), s, p.slots);
          if (disp[s] > bound || (depth > 1 && disp[s] > first && first > 0)) rep.continuity = false;
        }
      }
    }
    rep.monotone = rep.monotone && tr.monotone;
    rep.directions.push_back(std::move(tr));
  }
  rep.worst_final = slots_to_real(p.model, worst);
  for (std::size_t s = 0; s < p.slots; ++s) {
    if (!(worst[s] < tol)) {
      rep.below_tol = false;
      if (rep.failure.empty())
        rep.failure = "final ratio " + format_double(worst[s]) + " at coordinate " + std::to_string(s) +
                      " is not below " + format_double(tol);
    }
  }
  return rep;
}

std::size_t joint_layout(const detail::Tape& a, const detail::Tape& b, const ComplexElement& c,
                         const RealElement& r) {
  std::size_t slots = std::max(a.slot_count(c), b.slot_count(c));
  if (!c.is_finite()) slots = std::max(slots, r.stored().size() + 1);
  return slots;
}

}  // namespace

RealElement default_check_radius(const Expr& f, const ComplexElement& c) {
  const Expr d1 = symbolic_derivative(f);
  const Expr d2 = symbolic_derivative(d1);
  const RealElement m1 = modulus(eval(d1, c));
  const RealElement m2 = modulus(eval(d2, c));
  RealElement r = zip_with(m1, m2, [](double a, double b) { return 1e-3 / (1 + a + b); });
  for (const Expr& g : f.inverse_arguments()) {
    const RealElement gv = modulus(eval(g, c));
    const RealElement gd = modulus(eval(symbolic_derivative(g), c));
    r = inf(r, zip_with(gv, gd, [](double a, double b) { return a / (4 * (1 + b)); }));
  }
  return r;
}

DerivativeCheckReport difference_quotient_check(const Expr& f, const Expr& derivative, const ComplexElement& c,
                                                const std::optional<RealElement>& radius, unsigned depth,
                                                double tol) {
  const RealElement r = radius ? *radius : default_check_radius(f, c);
  require_check_radius(c, r);
  detail::Tape tf(f), td(derivative);
  QuadProblem p;
  p.model = c.model();
  p.slots = joint_layout(tf, td, c, r);
  auto conv = [](Complex x) { return to_q(x); };
  std::vector<Q> scratch;
  for (std::size_t s = 0; s < p.slots; ++s) {
    const Q cs = to_q(slot_value(c, s, p.slots));
    p.c.push_back(cs);
    p.fc.push_back(tf.run(cs, s, conv, q_zero, scratch));
    p.fprime.push_back(td.run(cs, s, conv, q_zero, scratch));
    p.r.push_back(slot_value(r, s, p.slots));
  }
  p.f = [&](std::size_t s, const Q& w) { return tf.run(w, s, conv, q_zero, scratch); };
  return run_check(p, depth, tol);
}

DerivativeCheckReport difference_quotient_check(const Expr& f, const ComplexElement& c,
                                                const std::optional<RealElement>& r, unsigned depth, double tol) {
  return difference_quotient_check(f, symbolic_derivative(f), c, r, depth, tol);
}

std::string format_check_report(const DerivativeCheckReport& rep) {
  std::ostringstream os;
  os << "point=" << format_element(rep.point) << "\n";
  os << "radius=" << format_element(rep.radius) << "\n";
  os << "derivative=" << format_element(rep.derivative) << "\n";
  os << "k worst_ratio\n";
  for (unsigned k = 1; k <= rep.depth; ++k) {
    double worst = 0;
    for (const auto& d : rep.directions) {
      const auto& x = d.ratios[k - 1];
      for (std::size_t s = 0; s < x.slot_count(); ++s) worst = std::max(worst, slot_value(x, s, x.slot_count()));
    }
    os << k << " " << format_double(worst) << "\n";
  }
  os << "final_ratio=" << format_element(rep.worst_final) << "\n";
  os << "monotone=" << (rep.monotone ? "yes" : "no") << " below_tol=" << (rep.below_tol ? "yes" : "no")
     << " continuity=" << (rep.continuity ? "yes" : "no") << "\n";
  if (!rep.failure.empty()) os << "reason: " << rep.failure << "\n";
  os << (rep.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CoefficientFamily series_derivative(const CoefficientFamily& fam) {
  std::vector<CoordinateFamily> out;
  for (const auto& c : fam.coordinates()) out.push_back(c.derivative());
  return CoefficientFamily(std::move(out));
}

namespace {

// a_n w^n = (a_n / L^n) (L w)^n: on coordinates with 0 < L < inf the closed form is taken with ratio 1 so
// that Horner works on coefficients of moderate size. Returns the rescaled family and the factor L.
std::pair<CoordinateFamily, double> rescaled(const CoordinateFamily& c) {
  if (c.tail_vanishes() || c.factorial_power != 0 || !(c.ratio > 0)) return {c, 1.0};
  CoordinateFamily out = c;
  out.ratio = 1.0;
  double f = 1.0;
  for (auto& t : out.table) {
    t /= f;
    f *= c.ratio;
  }
  return {out, c.ratio};
}

std::vector<Complex> coefficients(const CoordinateFamily& c, std::size_t terms) {
  std::vector<Complex> out(terms);
  for (std::size_t n = 0; n < terms; ++n) out[n] = c.coefficient(n);
  return out;
}

Q horner(const std::vector<Complex>& a, const Q& w) {
  Q acc(0, 0);
  for (std::size_t n = a.size(); n-- > 0;) acc = acc * w + to_q(a[n]);
  return acc;
}

}  // namespace

SeriesCheckReport series_derivative_check(const CoefficientFamily& fam, const ComplexElement& c,
                                          const ComplexElement& z0, unsigned depth, double tol) {
  require_same_model(fam.model(), c.model());
  require_same_model(c.model(), z0.model());
  const RadiusReport radius = cauchy_hadamard(fam);
  const std::size_t dim = fam.dimension();
  const RealElement d = modulus(z0 - c);
  for (std::size_t k = 0; k < dim; ++k) {
    if (radius.rho[k] == 0)
      throw OutsideOpenDisk("radius of convergence vanishes at coordinate " + std::to_string(k));
  }
  if (!disk_membership(z0, OrderDisk::open_disk(c, radius.rho)))
    throw OutsideOpenDisk("point lies outside the open disk of convergence");

  std::vector<double> rv(dim);
  for (std::size_t k = 0; k < dim; ++k)
    rv[k] = std::isinf(radius.rho[k]) ? d[k] + 1 : (d[k] + radius.rho[k]) / 2;
  const RealElement r = RealElement::finite(rv);

  SeriesCheckReport rep;
  rep.comparison_radius = r;

  const auto sums = tail_sums(fam, r);
  std::size_t terms = sums[0].size() - 1;
  for (std::size_t n = 2; n + 1 < sums[0].size(); ++n) {
    bool small = true;
    for (const auto& s : sums)
      if (!(s[n] <= 1e-20 * (1 + s[0]))) small = false;
    if (small) {
      terms = n;
      break;
    }
  }
  rep.terms = terms;

  const CoefficientFamily g2 = series_derivative(series_derivative(fam));
  // f = sum a~_n (L w)^n, f' = L sum a~'_n (L w)^n, f'' = L^2 sum a~''_n (L w)^n
  std::vector<std::vector<Complex>> a(dim), b(dim), b2(dim);
  std::vector<double> factor(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [sc, L] = rescaled(fam[k]);
    factor[k] = L;
    a[k] = coefficients(sc, terms);
    b[k] = coefficients(sc.derivative(), terms - 1);
    b2[k] = coefficients(sc.derivative().derivative(), std::max<std::size_t>(terms, 3) - 2);
  }
  const auto second = spectrum_membership(g2, c, r);
  rep.second_order_converges = second.membership == Membership::In;
  std::vector<double> m2(dim, kInf);
  if (rep.second_order_converges) {
    const auto s2 = tail_sums(g2, r);
    for (std::size_t k = 0; k < dim; ++k) m2[k] = s2[k][0];
    rep.second_order_converges = std::all_of(m2.begin(), m2.end(), [](double v) { return std::isfinite(v); });
  }
  rep.second_order_sum = RealElement::finite(m2);

  QuadProblem p;
  p.model = fam.model();
  p.slots = dim;
  std::vector<double> hr(dim);
  std::vector<Complex> fv(dim), gv(dim);
  std::vector<double> s0(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    s0[k] = sums[k][0];
    const Q L(factor[k], 0);
    const Q w0 = (to_q(z0[k]) - to_q(c[k])) * L;
    p.c.push_back(to_q(z0[k]));
    p.fc.push_back(horner(a[k], w0));
    p.fprime.push_back(L * horner(b[k], w0));
    fv[k] = to_c(p.fc[k]);
    gv[k] = to_c(p.fprime[k]);
    const double curv = factor[k] * factor[k] * std::abs(to_c(horner(b2[k], w0)));
    hr[k] = std::min(1e-3 / (1 + std::abs(gv[k]) + curv), (rv[k] - d[k]) / 2);
  }
  p.r = hr;
  p.f = [&](std::size_t k, const Q& w) { return horner(a[k], (w - to_q(c[k])) * Q(factor[k], 0)); };
  rep.f_value = ComplexElement::finite(fv);
  rep.g_value = ComplexElement::finite(gv);
  rep.check = run_check(p, depth, tol);

  rep.bound_ok = rep.second_order_converges;
  for (const auto& dir : rep.check.directions) {
    for (unsigned k = 1; k <= depth && rep.bound_ok; ++k) {
      for (std::size_t s = 0; s < dim; ++s) {
        const double habs = hr[s] / std::ldexp(1.0, int(k));
        // binary128 round-off in the residual, relative to sum |a_n| r^n
        const double slack = 1e-30 * (1 + s0[s]) / habs;
        if (!(dir.ratios[k - 1][s] <= 0.5 * habs * m2[s] * (1 + 1e-9) + slack)) rep.bound_ok = false;
      }
    }
  }
  return rep;
}

std::vector<ComplexElement> sample_disk(const OrderDisk& region, std::size_t count, std::uint64_t seed) {
  if (!region.center.is_finite()) throw std::invalid_argument("disk sampling needs the finite model");
  const std::size_t dim = region.center.model().dimension();
  std::vector<double> R(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (const auto* r = std::get_if<RealElement>(&region.radius)) {
      R[k] = (*r)[k];
    } else {
      const double v = std::get<ExtendedPositive>(region.radius)[k];
      R[k] = std::isinf(v) ? 1.0 : v;
    }
  }
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return double(gen() >> 11) * 0x1p-53; };
  std::vector<ComplexElement> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> z(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const double rad = 0.95 * R[k] * std::sqrt(unit());
      const double th = 2 * std::numbers::pi * unit();
      z[k] = region.center[k] + std::polar(rad, th);
    }
    out.push_back(ComplexElement::finite(std::move(z)));
  }
  return out;
}

namespace {

template <class Check>
HolomorphyReport holomorphy_loop(const OrderDisk& region, std::size_t sample_count, std::uint64_t seed, Check check) {
  if (!region.open) throw std::invalid_argument("holomorphy regions are open disks");
  HolomorphyReport rep;
  rep.points = sample_disk(region, sample_count, seed);
  rep.samples = rep.points.size();
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    std::string why;
    if (check(rep.points[i], why)) {
      ++rep.passed;
    } else if (!rep.first_failure) {
      rep.first_failure = i;
      rep.failure = "sample " + std::to_string(i) + " " + format_element(rep.points[i]) + ": " + why;
    }
  }
  return rep;
}

}  // namespace

HolomorphyReport holomorphy_report(const Expr& f, const OrderDisk& region, std::size_t sample_count, unsigned depth,
                                   double tol, std::uint64_t seed) {
  const Expr fp = symbolic_derivative(f);
  return holomorphy_loop(region, sample_count, seed, [&](const ComplexElement& z, std::string& why) {
    const auto rep = difference_quotient_check(f, fp, z, std::nullopt, depth, tol);
    why = rep.failure;
    return rep.pass();
  });
}

HolomorphyReport holomorphy_report(const CoefficientFamily& fam, const ComplexElement& c, const OrderDisk& region,
                                   std::size_t sample_count, unsigned depth, double tol, std::uint64_t seed) {
  return holomorphy_loop(region, sample_count, seed, [&](const ComplexElement& z, std::string& why) {
    const auto rep = series_derivative_check(fam, c, z, depth, tol);
    if (!rep.second_order_converges) why = "second-order series does not converge";
    else if (!rep.bound_ok) why = "residual exceeds the second-order bound";
    else why = rep.check.failure;
    return rep.pass();
  });
}

}  // namespace ordcx
