#include "ordcx/counterexamples.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordcx/convergence.hpp"
#include "ordcx/lattice.hpp"
#include "ordcx/literal.hpp"

namespace ordcx {

std::string format_gaussian(const GaussianRational& v) {
  if (v.im == Rational(0)) return format_rational(v.re);
  const std::string im = (v.im == Rational(1) ? "" : v.im == Rational(-1) ? "-" : format_rational(v.im)) + "i";
  if (v.re == Rational(0)) return im;
  return format_rational(v.re) + (v.im < 0 ? "" : "+") + im;
}

std::string format_element(const GaussianElement& z) {
  std::string out = "[";
  for (std::size_t k = 0; k < z.stored().size(); ++k) {
    if (k) out += ",";
    out += format_gaussian(z.stored()[k]);
  }
  if (!z.is_finite()) out += "|" + format_gaussian(z.tail());
  return out + "]";
}

namespace {

Rational ceil_of(const Rational& t) {
  const long long n = t.numerator(), d = t.denominator();
  long long q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return Rational(q);
}

std::size_t as_index(const Rational& t) {
  if (t < 0) return 0;
  return static_cast<std::size_t>(t.numerator() / t.denominator());
}

ExactElement seq_unit() { return ExactElement::unit(Model::sequence()); }

std::string idx(std::size_t k) { return std::to_string(k); }

}  // namespace

// ---------------------------------------------------------------------------
// Shift

ExactElement shift_map(const ExactElement& z) {
  if (z.is_finite()) throw std::invalid_argument("the shift map lives in the sequence model");
  if (strictly_dominates(seq_unit(), modulus_of(z))) return z;
  std::vector<Rational> prefix = z.stored();
  if (!prefix.empty()) prefix.erase(prefix.begin());
  return ExactElement::sequence(std::move(prefix), z.tail());
}

ExactElement shift_witness_direction(std::size_t n) {
  return ExactElement::sequence(std::vector<Rational>(n, Rational(0)), Rational(2));
}

SuperCheckResult<Rational> shift_witness(std::size_t n) {
  if (n == 0) throw std::invalid_argument("shift witness needs n >= 1");
  const ExactElement zero = ExactElement::zero(Model::sequence());
  return super_check<Rational>(shift_map, zero, seq_unit(), {shift_witness_direction(n)});
}

CounterexampleReport shift_not_super_differentiable(std::size_t n) {
  CounterexampleReport r{"shift", false, {}};
  const ExactElement zero = ExactElement::zero(Model::sequence());
  const ExactElement e = seq_unit();

  const std::vector<ExactElement> inside = {
      ExactElement::sequence({}, Rational(1, 2)),
      ExactElement::sequence({Rational(1, 3), Rational(-1, 2)}, Rational(3, 4)),
      ExactElement::sequence({Rational(0), Rational(9, 10)}, Rational(0)),
      ExactElement::sequence({Rational(-99, 100)}, Rational(-1, 7)),
  };
  bool small_ok = true;
  for (const auto& h : inside) {
    const ExactElement res = shift_map(h) - shift_map(zero) - e * h;
    const ExactElement m = modulus_of(h);
    if (!is_zero(res) || !leq(modulus_of(res), m * m)) small_ok = false;
  }
  // f(h_m) - f(0) - e h_m -> 0 along h_m = e/(m+2), certified by the convergence verifier.
  const std::function<ExactElement(std::size_t)> residuals = [&](std::size_t m) {
    const ExactElement h = ExactElement::sequence({}, Rational(1, static_cast<long long>(m + 2)));
    return shift_map(h) - shift_map(zero) - e * h;
  };
  const ConvergenceCertificate<Rational> cert{Regulator<Rational>::harmonic(e),
                                              [](std::size_t) { return std::size_t(0); },
                                              {0, 1, 2, 5, 10}};
  const auto verdict = verify_certificate(residuals, zero, cert, 32);
  r.witness.push_back(std::string("residual inside the open unit disk: ") +
                      (small_ok && verdict.confirmed ? "0 <= |h|^2 on " + std::to_string(inside.size()) +
                                                           " samples, certificate confirmed on " +
                                                           std::to_string(verdict.checked) + " terms"
                                                     : "nonzero"));

  const auto w = shift_witness(n);
  const ExactElement h = shift_witness_direction(n);
  r.witness.push_back("h_" + idx(n) + "=" + format_element(h));
  if (w.refuted) {
    r.witness.push_back("f(h)-f(0)-e*h=" + format_element(*w.residual));
    r.witness.push_back("violation at index " + idx(w.coordinate) + ": residual " +
                        format_rational((*w.residual)[w.coordinate]) + " > 0 = |h|*q there for every q");
  }
  r.reproduced = small_ok && verdict.confirmed && w.refuted && w.coordinate + 1 == n &&
                 w.residual && *w.residual == ExactElement::sequence(
                                                  [&] {
                                                    std::vector<Rational> p(n, Rational(0));
                                                    p[n - 1] = 2;
                                                    return p;
                                                  }(),
                                                  Rational(0));
  return r;
}

// ---------------------------------------------------------------------------
// Swap

GaussianElement swap_map(const GaussianElement& z) {
  if (!(z.model() == Model::finite(2))) throw ModelMismatch("the swap map lives in C^2");
  return GaussianElement::finite({z[1], z[0]});
}

SuperCheckResult<GaussianRational> swap_witness(const GaussianElement& f0, const std::vector<GaussianElement>& hs) {
  const GaussianElement zero = GaussianElement::zero(Model::finite(2));
  return super_check<GaussianRational>(swap_map, zero, f0, hs);
}

CounterexampleReport swap_not_differentiable_c2() {
  CounterexampleReport r{"swap", false, {}};
  using G = GaussianRational;
  const std::vector<GaussianElement> candidates = {
      GaussianElement::finite({G(0), G(0)}),
      GaussianElement::finite({G(1), G(1)}),
      GaussianElement::finite({G(Rational(0), Rational(1)), G(Rational(-2), Rational(1, 3))}),
      GaussianElement::finite({G(Rational(7, 5)), G(Rational(-1))}),
  };
  bool ok = true;
  for (std::size_t n = 1; n <= 10; ++n) {
    const GaussianElement h = GaussianElement::finite({G(Rational(1, static_cast<long long>(n))), G(0)});
    for (const auto& f0 : candidates) {
      const auto w = swap_witness(f0, {h});
      if (!w.refuted || w.coordinate != 1 || !((*w.residual)[1] == h[0])) ok = false;
    }
  }
  const GaussianElement h1 = GaussianElement::finite({G(Rational(1, 10)), G(0)});
  const GaussianElement h2 = GaussianElement::finite({G(0), G(Rational(1, 10))});
  const GaussianElement full = GaussianElement::finite({G(Rational(1, 10)), G(Rational(1, 10))});
  const auto w1 = swap_witness(candidates[2], {h1});
  const auto w2 = swap_witness(candidates[2], {h2});
  const auto w3 = swap_witness(candidates[2], {full});
  ok = ok && w1.refuted && w1.coordinate == 1 && w2.refuted && w2.coordinate == 0 && !w3.refuted;
  r.witness.push_back("candidates f0 checked: " + std::to_string(candidates.size()) + ", directions h_n=(1/n,0), n=1..10");
  if (w1.refuted)
    r.witness.push_back("h=" + format_element(h1) + " f0=" + format_element(candidates[2]) + " residual=" +
                        format_element(*w1.residual) + " violation at index " + idx(w1.coordinate));
  if (w2.refuted)
    r.witness.push_back("h=" + format_element(h2) + " violation at index " + idx(w2.coordinate));
  r.witness.push_back("h=" + format_element(full) + " full support: " + (w3.refuted ? "violation" : "no violation"));
  r.reproduced = ok;
  return r;
}

// ---------------------------------------------------------------------------
// f_{k,l}

ExactElement f_kl(std::size_t k, std::size_t l) {
  if (l == 0) throw std::invalid_argument("f_{k,l} needs l >= 1");
  return ExactElement::sequence(std::vector<Rational>(k, Rational(1)), Rational(1, static_cast<long long>(l)));
}

ExactElement g_k(std::size_t k) { return ExactElement::sequence(std::vector<Rational>(k, Rational(0)), Rational(1)); }

UnboundedWitness fkl_unbounded_witness(const ExactElement& u, std::size_t k0, std::size_t l0) {
  if (u.is_finite()) throw ModelMismatch("candidate bound must be a sequence");
  UnboundedWitness w;
  w.k = k0;
  w.l = as_index(ceil_of(u.tail())) + l0 + 1;
  w.index = std::max(k0 + 1, u.stored().size());
  w.value = inverse(f_kl(w.k, w.l))[w.index];
  w.bound = u[w.index];
  return w;
}

CounterexampleReport fkl_inverse_net_diverges() {
  CounterexampleReport r{"fkl-net", false, {}};
  const ExactElement e = seq_unit();
  const std::function<ExactElement(std::size_t, std::size_t)> net = [](std::size_t k, std::size_t l) {
    return f_kl(k, l);
  };
  const auto verdict = verify_net_certificate<Rational>(
      net, e, Regulator<Rational>::shifted_tail(e),
      [](std::size_t m) { return std::pair<std::size_t, std::size_t>{m, 1}; }, {0, 1, 2, 3, 5, 8}, 24);
  const ExactElement d = modulus_of(f_kl(2, 5) - e);
  r.witness.push_back("|f_{2,5}-e|=" + format_element(d) + " <= g_2=" + format_element(g_k(2)));
  r.witness.push_back(std::string("net certificate |f_{k,l}-e| <= g_k: ") +
                      (verdict.confirmed ? "confirmed" : "violated") + " on " + std::to_string(verdict.checked) +
                      " indices");

  bool ok = verdict.confirmed && leq(d, g_k(2));
  const std::vector<std::pair<ExactElement, std::pair<std::size_t, std::size_t>>> bounds = {
      {ExactElement::sequence({}, Rational(100)), {3, 1}},
      {e, {0, 0}},
      {ExactElement::sequence({Rational(5), Rational(50), Rational(500)}, Rational(7, 2)), {1, 4}},
  };
  for (const auto& [u, kl] : bounds) {
    const auto w = fkl_unbounded_witness(u, kl.first, kl.second);
    const bool beats = u.stored().size() <= w.index && w.bound < w.value && w.index > kl.first &&
                       w.k >= kl.first && w.l >= kl.second;
    ok = ok && beats;
    r.witness.push_back("u=" + format_element(u) + " (k0,l0)=(" + idx(kl.first) + "," + idx(kl.second) + ") -> l=" +
                        idx(w.l) + ": f_{" + idx(w.k) + "," + idx(w.l) + "}^-1 at index " + idx(w.index) + " = " +
                        format_rational(w.value) + " > " + format_rational(w.bound));
  }
  r.reproduced = ok;
  return r;
}

// ---------------------------------------------------------------------------
// l-infinity inversion

UnboundedWitness linf_witness(const ExactElement& u, std::size_t K) {
  if (u.is_finite()) throw ModelMismatch("candidate bound must be a sequence");
  UnboundedWitness w;
  w.k = std::max(K, as_index(ceil_of(u.tail()))) + 1;
  w.l = w.k;
  w.index = std::max(w.k, u.stored().size());
  w.value = inverse(f_kl(w.k, w.k))[w.index];
  w.bound = u[w.index];
  return w;
}

FiniteContrast finite_inversion_contrast(std::size_t dim, std::size_t depth) {
  std::vector<Rational> c(dim), d(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    c[k] = Rational(static_cast<long long>(k + 2), 2 - static_cast<long long>(k % 2));
    d[k] = Rational(1, static_cast<long long>(k + 2));
  }
  const ExactElement C = ExactElement::finite(c), D = ExactElement::finite(d);
  const ExactElement Cinv = inverse(C);
  const std::function<ExactElement(std::size_t)> z = [&](std::size_t n) {
    return C + Rational(1, static_cast<long long>(n + 1)) * D;
  };
  const std::function<ExactElement(std::size_t)> zinv = [&](std::size_t n) { return inverse(z(n)); };
  // |z_n^-1 - c^-1| = d / ((n+1) z_n c) <= (d / c^2) / (n+1) since z_n >= c
  const ConvergenceCertificate<Rational> cert{Regulator<Rational>::harmonic(D * Cinv * Cinv),
                                              [](std::size_t m) { return m; },
                                              {0, 1, 2, 4, 8, 16, 32}};
  const auto verdict = verify_certificate(zinv, Cinv, cert, depth);
  FiniteContrast out;
  out.converges = verdict.confirmed;
  out.checked = verdict.checked;
  out.bound = Cinv;
  out.bounded = true;
  for (std::size_t n = 0; n <= depth; ++n)
    if (!leq(modulus_of(zinv(n)), Cinv)) out.bounded = false;
  return out;
}

CounterexampleReport linf_inversion_not_sigma_continuous() {
  CounterexampleReport r{"linf-sigma", false, {}};
  const ExactElement e = seq_unit();
  const std::function<ExactElement(std::size_t)> z = [](std::size_t k) { return f_kl(k, k); };
  const ConvergenceCertificate<Rational> cert{Regulator<Rational>::shifted_tail(e),
                                              [](std::size_t m) { return std::max<std::size_t>(m, 1); },
                                              {0, 1, 2, 4, 8, 16}};
  const auto verdict = verify_certificate(z, e, cert, 40);
  const ExactElement z5inv = inverse(f_kl(5, 5));
  r.witness.push_back(std::string("z_k -> e with regulator g_k: ") + (verdict.confirmed ? "confirmed" : "violated"));
  r.witness.push_back("z_5^-1=" + format_element(z5inv));
  bool ok = verdict.confirmed && z5inv.tail() == Rational(5);
  const std::vector<std::pair<ExactElement, std::size_t>> bounds = {
      {ExactElement::sequence({}, Rational(10)), 3},
      {ExactElement::sequence({Rational(40), Rational(40)}, Rational(1, 2)), 0},
      {ExactElement::sequence({}, Rational(7)), 20},
  };
  for (const auto& [u, K] : bounds) {
    const auto w = linf_witness(u, K);
    ok = ok && w.k > K && w.bound < w.value;
    r.witness.push_back("u=" + format_element(u) + " K=" + idx(K) + " -> k=" + idx(w.k) + ": z_k^-1 at index " +
                        idx(w.index) + " = " + format_rational(w.value) + " > " + format_rational(w.bound));
  }
  const auto contrast = finite_inversion_contrast();
  r.witness.push_back(std::string("finite contrast in Q^8: inverses ") +
                      (contrast.converges ? "converge" : "do not converge") + " and " +
                      (contrast.bounded ? "stay below " + format_element(contrast.bound) : "are unbounded"));
  r.reproduced = ok && contrast.converges && contrast.bounded;
  return r;
}

// ---------------------------------------------------------------------------
// Disk

ExactElement disk_witness(const ExactElement& s) {
  if (!(s.model() == Model::finite(2))) throw ModelMismatch("disk witness lives in C^2");
  if (!is_positive(s) || !is_invertible(s)) throw InvalidRadius("radius must be positive and invertible");
  return ExactElement::finite({Rational(1) + s[0] / 2, Rational(0)});
}

CounterexampleReport disk_strict_inequality_not_open() {
  CounterexampleReport r{"disk-open", false, {}};
  const ExactElement center = ExactElement::finite({Rational(1), Rational(0)});
  const ExactElement one = ExactElement::unit(Model::finite(2));
  const bool excluded = !strictly_dominates(one, modulus_of(center));
  const bool below_pointwise = modulus_of(center)[0] <= 1 && modulus_of(center)[1] < 1;
  r.witness.push_back("(1,1)-|(1,0)|=" + format_element(one - modulus_of(center)) + " is not invertible: (1,0) " +
                      (excluded ? "is not" : "is") + " in the open disk D((0,0),(1,1))");
  bool ok = excluded && below_pointwise;
  const std::vector<ExactElement> radii = {
      ExactElement::finite({Rational(1, 5), Rational(1, 5)}),
      ExactElement::finite({Rational(1, 1000000), Rational(1)}),
      ExactElement::finite({Rational(3), Rational(1, 9)}),
  };
  for (const auto& s : radii) {
    const ExactElement p = disk_witness(s);
    const bool near = strictly_dominates(s, modulus_of(p - center));
    const bool outside = !strictly_dominates(one, modulus_of(p));
    ok = ok && near && outside && modulus_of(p)[0] >= 1;
    r.witness.push_back("s=" + format_element(s) + " -> point " + format_element(p) + " with |p_0|=" +
                        format_rational(modulus_of(p)[0]) + " >= 1");
  }
  r.reproduced = ok;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> counterexample_names() { return {"shift", "swap", "fkl-net", "linf-sigma", "disk-open"}; }

std::vector<CounterexampleReport> run_counterexamples(const std::string& name) {
  std::vector<CounterexampleReport> out;
  const bool all = name == "all";
  if (all || name == "shift") out.push_back(shift_not_super_differentiable());
  if (all || name == "swap") out.push_back(swap_not_differentiable_c2());
  if (all || name == "fkl-net") out.push_back(fkl_inverse_net_diverges());
  if (all || name == "linf-sigma") out.push_back(linf_inversion_not_sigma_continuous());
  if (all || name == "disk-open") out.push_back(disk_strict_inequality_not_open());
  if (out.empty()) throw std::invalid_argument("unknown counterexample '" + name + "'");
  return out;
}

std::string format_counterexample(const CounterexampleReport& r) {
  std::string out = r.name + ": " + (r.reproduced ? "REPRODUCED" : "FAILED") + "\n";
  for (const auto& line : r.witness) out += "  " + line + "\n";
  return out;
}

}  // namespace ordcx
