#include "ordcx/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ordcx/lattice.hpp"
#include "ordcx/literal.hpp"

namespace ordcx {

SequenceTerm SequenceTerm::periodic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("periodic term needs at least one value");
  SequenceTerm t;
  t.kind = Kind::Periodic;
  t.values = std::move(values);
  return t;
}

SequenceTerm SequenceTerm::harmonic(double a, double b, double s) {
  if (!(s > 0)) throw std::invalid_argument("harmonic term needs s > 0");
  SequenceTerm t;
  t.kind = Kind::Harmonic;
  t.a = a;
  t.b = b;
  t.s = s;
  return t;
}

SequenceTerm SequenceTerm::from(std::function<double(std::size_t)> f) {
  SequenceTerm t;
  t.kind = Kind::Custom;
  t.custom = std::move(f);
  return t;
}

double SequenceTerm::operator()(std::size_t n) const {
  switch (kind) {
    case Kind::Periodic:
      return values[n % values.size()];
    case Kind::Harmonic:
      return a + b / (double(n) + s);
    case Kind::Custom:
      return custom(n);
  }
  return 0;
}

RealSequence::RealSequence(std::vector<SequenceTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("sequence needs at least one coordinate");
}

RealElement RealSequence::operator()(std::size_t n) const {
  std::vector<double> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t(n));
  return RealElement::finite(std::move(out));
}

LimsupResult limsup_bounded(const RealSequence& seq, std::size_t depth) {
  if (depth < 2) throw DepthTooSmall("limsup depth must be at least 2");
  const std::size_t dim = seq.dimension();
  std::vector<double> value(dim), delta(dim, 0.0);
  bool exact = true;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto& t = seq.terms()[k];
    auto guard = [k](double v) {
      if (!(std::fabs(v) <= kOverflowGuard)) throw Unbounded(k);
    };
    switch (t.kind) {
      case SequenceTerm::Kind::Periodic:
        for (double v : t.values) guard(v);
        value[k] = *std::max_element(t.values.begin(), t.values.end());
        break;
      case SequenceTerm::Kind::Harmonic:
        guard(std::fabs(t.a) + std::fabs(t.b) / t.s);
        value[k] = t.a;
        break;
      case SequenceTerm::Kind::Custom: {
        exact = false;
        double late = -kInf, early = -kInf;
        for (std::size_t n = 0; n <= 2 * depth; ++n) {
          const double v = t(n);
          guard(v);
          if (n >= depth) late = std::max(late, v);
          if (n >= depth / 2 && n <= depth) early = std::max(early, v);
        }
        value[k] = late;
        delta[k] = std::fabs(late - early);
        break;
      }
    }
  }
  return {RealElement::finite(std::move(value)), exact, RealElement::finite(std::move(delta))};
}

ExtendedPositive root_limsup(const CoefficientFamily& fam) {
  std::vector<double> out;
  for (const auto& c : fam.coordinates()) out.push_back(c.root_limsup());
  return ExtendedPositive(std::move(out));
}

RadiusReport cauchy_hadamard(const CoefficientFamily& fam) {
  const ExtendedPositive L = root_limsup(fam);
  const ExtendedPositive rho = generalized_inverse(L);
  const RealElement rho_F = finite_part(rho);
  const ExtendedPositive rho_infty = infinite_part(rho);
  RadiusReport r{L,
                 rho,
                 rho_F,
                 rho_infty,
                 three_part_decompose(L),
                 three_part_decompose(rho),
                 false,
                 false,
                 false,
                 false};
  r.rho_is_inverse_of_L = ext_mul(L, rho) == ext_mul(L, generalized_inverse(L)) && rho == generalized_inverse(L);
  r.dual_L_is_rho_infty = band_projection_from(L).complement() == Band::support_of(rho_infty.as_real());
  r.L_infty_is_dual_rho = Band::support_of(infinite_part(L).as_real()) == band_projection_from(rho).complement();
  r.pseudo_L_F_is_rho_F = pseudo_inverse(finite_part(L)) == rho_F;
  return r;
}

namespace {

std::string compact(const RealElement& x) {
  if (x.is_finite() && x.model().dimension() == 1) return format_double(x[0]);
  return format_element(x);
}

std::string compact(const ExtendedPositive& x) { return compact(x.as_real()); }

std::string bands_line(const ThreePartDecomposition& d) {
  return "finite=" + d.finite_band.to_string() + " infinite=" + d.infinite_band.to_string() +
         " zero=" + d.disjoint_band.to_string();
}

const char* ok(bool b) { return b ? "ok" : "FAILED"; }

}  // namespace

std::string format_radius_report(const RadiusReport& r) {
  std::ostringstream os;
  os << "L=" << compact(r.L) << " rho=" << compact(r.rho) << "\n";
  os << "rho_F=" << compact(r.rho_F) << "\n";
  os << "rho_inf=" << compact(r.rho_infty) << "\n";
  os << "bands L: " << bands_line(r.L_bands) << "\n";
  os << "bands rho: " << bands_line(r.rho_bands) << "\n";
  os << "rho = L^-1 (generalized inverse): " << ok(r.rho_is_inverse_of_L) << "\n";
  os << "B_L^d = B_rho_inf: " << r.L_bands.disjoint_band.to_string() << " = "
     << Band::support_of(r.rho_infty.as_real()).to_string() << " " << ok(r.dual_L_is_rho_infty) << "\n";
  os << "B_L_inf = B_rho^d: " << r.L_bands.infinite_band.to_string() << " = " << r.rho_bands.disjoint_band.to_string()
     << " " << ok(r.L_infty_is_dual_rho) << "\n";
  os << "(L_F)* = rho_F: " << ok(r.pseudo_L_F_is_rho_F) << "\n";
  return os.str();
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In:
      return "IN";
    case Membership::Out:
      return "OUT";
    case Membership::Boundary:
      return "BOUNDARY";
  }
  return "?";
}

namespace {

double log_term(const CoordinateFamily& c, std::size_t n, double r) {
  const double la = c.log_abs(n);
  if (la == -kInf) return -kInf;
  if (n == 0) return la;
  if (r == 0) return -kInf;
  return la + double(n) * std::log(r);
}

void require_radius(const CoefficientFamily& fam, const RealElement& r) {
  require_same_model(fam.model(), r.model());
  if (!is_positive(r)) throw InvalidRadius("spectrum radius must be positive");
  for (std::size_t k = 0; k < fam.dimension(); ++k)
    if (!std::isfinite(r[k])) throw InvalidRadius("spectrum radius must be finite");
}

}  // namespace

std::vector<std::vector<double>> tail_sums(const CoefficientFamily& fam, const RealElement& r,
                                           std::size_t max_terms) {
  require_radius(fam, r);
  const std::size_t N = max_terms;
  std::vector<std::vector<double>> out(fam.dimension());
  std::vector<double> lt(N + 1);
  for (std::size_t k = 0; k < fam.dimension(); ++k) {
    const auto& c = fam[k];
    for (std::size_t n = 0; n <= N; ++n) lt[n] = log_term(c, n, r[k]);
    double q = 0;
    for (std::size_t n = N / 2; n < N; ++n) {
      if (lt[n + 1] == -kInf) continue;
      if (lt[n] == -kInf) {
        q = kInf;
        break;
      }
      q = std::max(q, std::exp(lt[n + 1] - lt[n]));
    }
    const double last = std::exp(lt[N]);
    double remainder = 0;
    if (last > 0) remainder = q < 1 ? last * q / (1 - q) : kInf;
    auto& s = out[k];
    s.assign(N + 2, 0.0);
    s[N + 1] = remainder;
    for (std::size_t n = N + 1; n-- > 0;) s[n] = s[n + 1] + std::exp(lt[n]);
  }
  return out;
}

SpectrumVerdict spectrum_membership(const CoefficientFamily& fam, const ComplexElement& c, const RealElement& r,
                                    double tail_tolerance, std::size_t max_terms) {
  require_same_model(fam.model(), c.model());
  require_radius(fam, r);
  SpectrumVerdict v{Membership::Boundary, ext_mul(root_limsup(fam), ExtendedPositive::from(r)), std::nullopt,
                    std::nullopt};
  const auto& p = v.product.coords();
  if (std::all_of(p.begin(), p.end(), [](double x) { return x < 1; })) {
    v.membership = Membership::In;
    const auto sums = tail_sums(fam, r, max_terms);
    v.cutoff = max_terms;
    for (std::size_t k = 0; k <= max_terms; ++k) {
      double worst = 0;
      for (const auto& s : sums) worst = std::max(worst, s[k + 1]);
      if (worst < tail_tolerance) {
        v.cutoff = k;
        v.tail_bound = worst;
        v.uniform_verified = true;
        break;
      }
      if (k == max_terms) v.tail_bound = worst;
    }
    return v;
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k] > 1)) continue;
    v.membership = Membership::Out;
    v.witness_coordinate = k;
    const auto& cf = fam[k];
    for (std::size_t n = cf.table.size(); n < cf.table.size() + 1000000; ++n) {
      if (log_term(cf, n, r[k]) > 0) {
        v.witness_index = n;
        break;
      }
    }
    return v;
  }
  return v;
}

ComplexElement partial_sum(const CoefficientFamily& fam, const ComplexElement& c, const ComplexElement& z,
                           std::size_t terms) {
  require_same_model(fam.model(), c.model());
  require_same_model(c.model(), z.model());
  std::vector<Complex> out(fam.dimension());
  for (std::size_t k = 0; k < fam.dimension(); ++k) {
    const Complex w = z[k] - c[k];
    Complex acc = 0;
    for (std::size_t n = terms; n-- > 0;) acc = acc * w + fam[k].coefficient(n);
    out[k] = acc;
  }
  return ComplexElement::finite(std::move(out));
}

SeriesValue evaluate_series(const CoefficientFamily& fam, const ComplexElement& c, const ComplexElement& z,
                            double tail_tolerance) {
  const RealElement r = modulus(z - c);
  SeriesValue out{spectrum_membership(fam, c, r, tail_tolerance), ComplexElement::zero(fam.model()), 0};
  if (out.verdict.membership != Membership::In) return out;
  const auto sums = tail_sums(fam, r);
  std::size_t terms = out.verdict.cutoff + 1;
  for (std::size_t n = 0; n < sums[0].size() - 1; ++n) {
    bool negligible = true;
    for (const auto& s : sums)
      if (!(s[n] <= 1e-17 * (1 + s[0]))) negligible = false;
    if (negligible) {
      terms = std::max(terms, n);
      break;
    }
    if (n + 2 == sums[0].size()) terms = n + 1;
  }
  out.terms = terms;
  out.value = partial_sum(fam, c, z, terms);
  return out;
}

}  // namespace ordcx
