#include "ordcx/family.hpp"

#include <cmath>
#include <sstream>

#include "literal_detail.hpp"
#include "ordcx/literal.hpp"

namespace ordcx {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::shifted_power(unsigned d) {
  return constant(1.0).times_n_plus_one(d);
}

double Polynomial::operator()(double n) const {
  double v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + *it;
  return v;
}

Polynomial Polynomial::shift() const {
  std::vector<double> out(coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double binom = 1;  // C(i, j)
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] += binom * coeffs_[i];
      binom = binom * double(i - j) / double(j + 1);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times_n_plus_one(unsigned times) const {
  std::vector<double> c = coeffs_;
  for (unsigned t = 0; t < times; ++t) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

CoordinateFamily CoordinateFamily::zero() {
  CoordinateFamily c;
  c.scale = 0.0;
  c.poly = Polynomial();
  return c;
}

CoordinateFamily CoordinateFamily::geometric(double r) {
  if (!(r >= 0) || std::isinf(r)) throw std::invalid_argument("geometric ratio must be finite and nonnegative");
  CoordinateFamily c;
  c.ratio = r;
  return c;
}

CoordinateFamily CoordinateFamily::poly_geometric(unsigned degree, double r) {
  CoordinateFamily c = geometric(r);
  c.poly = Polynomial::shifted_power(degree);
  return c;
}

CoordinateFamily CoordinateFamily::inverse_factorial() {
  CoordinateFamily c;
  c.factorial_power = -1;
  return c;
}

CoordinateFamily CoordinateFamily::factorial() {
  CoordinateFamily c;
  c.factorial_power = 1;
  return c;
}

CoordinateFamily CoordinateFamily::with_table(std::vector<Complex> values) const {
  CoordinateFamily c = *this;
  c.table = std::move(values);
  return c;
}

bool CoordinateFamily::tail_vanishes() const {
  return scale == Complex(0.0) || poly.is_zero();
}

TermKind CoordinateFamily::kind() const {
  if (tail_vanishes()) return TermKind::Zero;
  if (scale != Complex(1.0)) return TermKind::General;
  if (factorial_power == 0) {
    if (poly == Polynomial::constant(1.0)) return TermKind::Geometric;
    if (poly == Polynomial::shifted_power(unsigned(poly.degree()))) return TermKind::PolyGeometric;
    return TermKind::General;
  }
  if (ratio != 1.0 || !(poly == Polynomial::constant(1.0))) return TermKind::General;
  return factorial_power < 0 ? TermKind::InverseFactorial : TermKind::Factorial;
}

double CoordinateFamily::log_abs(std::size_t n) const {
  if (n < table.size()) return std::log(std::abs(table[n]));
  if (tail_vanishes()) return -kInf;
  const double pv = poly(double(n));
  if (pv == 0) return -kInf;
  double lr = 0;
  if (ratio == 0) {
    if (n > 0) return -kInf;
  } else {
    lr = double(n) * std::log(ratio);
  }
  return std::log(std::abs(scale)) + std::log(std::fabs(pv)) + lr + factorial_power * std::lgamma(double(n) + 1);
}

Complex CoordinateFamily::coefficient(std::size_t n) const {
  if (n < table.size()) return table[n];
  if (tail_vanishes()) return 0.0;
  const double pv = poly(double(n));
  if (n <= 170) {
    const double direct = pv * std::pow(ratio, double(n)) * std::pow(std::tgamma(double(n) + 1), factorial_power);
    if (std::isfinite(direct) && direct != 0) return scale * direct;
  }
  const double la = log_abs(n);
  if (la == -kInf) return 0.0;
  return (scale / std::abs(scale)) * std::copysign(std::exp(la), pv);
}

double CoordinateFamily::root_limsup() const {
  if (tail_vanishes()) return 0.0;
  switch (factorial_power) {
    case -1:
      return 0.0;
    case 0:
      return ratio;
    default:
      return ratio == 0 ? 0.0 : kInf;
  }
}

CoordinateFamily CoordinateFamily::derivative() const {
  CoordinateFamily d = *this;
  d.table.clear();
  for (std::size_t k = 0; k + 1 < table.size(); ++k) d.table.push_back(double(k + 1) * table[k + 1]);
  d.scale = scale * ratio;
  d.poly = poly.shift().times_n_plus_one(unsigned(1 + factorial_power));
  if (d.tail_vanishes()) {
    d.scale = 0.0;
    d.poly = Polynomial();
  }
  return d;
}

double CoordinateFamily::closed_ratio(std::size_t n) const {
  if (tail_vanishes()) return 0.0;
  const double p0 = poly(double(n));
  if (p0 == 0) return kInf;
  return ratio * std::fabs(poly(double(n + 1)) / p0) * std::pow(double(n + 1), factorial_power);
}

CoefficientFamily::CoefficientFamily(std::vector<CoordinateFamily> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("coefficient family needs at least one coordinate");
}

ComplexElement CoefficientFamily::coefficient(std::size_t n) const {
  std::vector<Complex> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.coefficient(n));
  return ComplexElement::finite(std::move(out));
}

RealElement CoefficientFamily::abs_coefficient(std::size_t n) const {
  return modulus_of(coefficient(n));
}

namespace {

double nonnegative(detail::TextCursor& in, const char* what) {
  in.skip_ws();
  const std::size_t at = in.pos();
  if (in.peek() == '-') in.fail_at(at, std::string(what) + " must be nonnegative");
  return in.number();
}

CoordinateFamily closed_kind(detail::TextCursor& in) {
  in.skip_ws();
  const std::size_t at = in.pos();
  const std::string kind = in.word();
  if (kind == "geom") return CoordinateFamily::geometric(nonnegative(in, "ratio"));
  if (kind == "polygeom") {
    const auto d = in.integer();
    if (d > 64) in.fail("degree too large");
    return CoordinateFamily::poly_geometric(unsigned(d), nonnegative(in, "ratio"));
  }
  if (kind == "invfact") return CoordinateFamily::inverse_factorial();
  if (kind == "fact") return CoordinateFamily::factorial();
  if (kind == "zero") return CoordinateFamily::zero();
  if (kind == "term") {
    CoordinateFamily c;
    c.scale = detail::parse_scalar(in, false);
    if (!in.accept_word("poly")) in.fail("expected 'poly'" + in.found());
    std::vector<double> p;
    do {
      const bool neg = in.accept('-');
      const double v = in.number();
      p.push_back(neg ? -v : v);
    } while (in.accept(','));
    c.poly = Polynomial(std::move(p));
    if (!in.accept_word("ratio")) in.fail("expected 'ratio'" + in.found());
    c.ratio = nonnegative(in, "ratio");
    if (!in.accept_word("fact")) in.fail("expected 'fact'" + in.found());
    const bool neg = in.accept('-');
    const auto pw = in.integer();
    if (pw > 1) in.fail("factorial power must be -1, 0 or 1");
    c.factorial_power = neg ? -int(pw) : int(pw);
    return c;
  }
  if (kind.empty()) in.fail("expected a family kind" + in.found());
  in.fail_at(at, "unknown family kind '" + kind + "'");
}

}  // namespace

CoordinateFamily parse_coordinate_family(std::string_view line, std::size_t line_number) {
  detail::TextCursor in(line, line_number);
  CoordinateFamily c;
  in.skip_ws();
  if (in.accept_word("table")) {
    std::vector<Complex> values;
    do values.push_back(detail::parse_scalar(in, false));
    while (in.accept(','));
    c = in.accept_word("then") ? closed_kind(in) : CoordinateFamily::zero();
    c.table = std::move(values);
  } else {
    c = closed_kind(in);
  }
  in.expect_end();
  return c;
}

CoefficientFamily parse_family(std::string_view text) {
  std::vector<CoordinateFamily> coords;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#')
      coords.push_back(parse_coordinate_family(line, line_number));
    start = end + 1;
  }
  if (coords.empty()) throw ParseError(1, 1, "empty family description");
  return CoefficientFamily(std::move(coords));
}

std::string format_coordinate_family(const CoordinateFamily& c) {
  std::ostringstream os;
  if (!c.table.empty()) {
    os << "table ";
    for (std::size_t k = 0; k < c.table.size(); ++k) os << (k ? "," : "") << format_complex(c.table[k]);
    if (c.tail_vanishes()) return os.str();
    os << " then ";
  }
  switch (c.kind()) {
    case TermKind::Zero:
      os << "zero";
      break;
    case TermKind::Geometric:
      os << "geom " << format_double(c.ratio);
      break;
    case TermKind::PolyGeometric:
      os << "polygeom " << c.poly.degree() << ' ' << format_double(c.ratio);
      break;
    case TermKind::InverseFactorial:
      os << "invfact";
      break;
    case TermKind::Factorial:
      os << "fact";
      break;
    case TermKind::General: {
      os << "term " << format_complex(c.scale) << " poly ";
      for (std::size_t j = 0; j < c.poly.coeffs().size(); ++j) os << (j ? "," : "") << format_double(c.poly.coeffs()[j]);
      os << " ratio " << format_double(c.ratio) << " fact " << c.factorial_power;
      break;
    }
  }
  return os.str();
}

std::string format_family(const CoefficientFamily& fam) {
  std::string out;
  for (const auto& c : fam.coordinates()) out += format_coordinate_family(c) + "\n";
  return out;
}

}  // namespace ordcx
