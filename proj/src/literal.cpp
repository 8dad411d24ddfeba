#include "ordcx/literal.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include "literal_detail.hpp"

namespace ordcx {

namespace detail {

namespace {

Complex scalar_term(TextCursor& in, bool allow_inf) {
  in.skip_ws();
  if (in.accept('(')) {
    Complex v = parse_scalar(in, allow_inf);
    in.expect(')');
    return v;
  }
  if (allow_inf && in.accept_word("inf")) return {kInf, 0.0};
  if (in.accept_word("i")) return {0.0, 1.0};
  if (!in.at_number()) in.fail("expected a number" + in.found());
  const double v = in.number();
  if (in.peek() == 'i') {
    const char after = in.peek(1);
    if (!std::isalnum(static_cast<unsigned char>(after))) {
      in.accept('i');
      return {0.0, v};
    }
  }
  return {v, 0.0};
}

}  // namespace

Complex parse_scalar(TextCursor& in, bool allow_inf) {
  Complex total{0.0, 0.0};
  bool first = true;
  while (true) {
    double sign = 1.0;
    if (in.accept('-')) {
      sign = -1.0;
    } else if (in.accept('+')) {
    } else if (!first) {
      break;
    }
    total += sign * scalar_term(in, allow_inf);
    first = false;
    in.skip_ws();
    if (in.peek() != '+' && in.peek() != '-') break;
  }
  return total;
}

ComplexElement parse_element_literal(TextCursor& in, bool allow_inf) {
  in.expect('[');
  std::vector<Complex> prefix;
  std::optional<Complex> tail;
  if (in.accept(']')) in.fail("empty element literal");
  if (in.accept('|')) {
    tail = parse_scalar(in, allow_inf);
  } else {
    prefix.push_back(parse_scalar(in, allow_inf));
    while (in.accept(',')) prefix.push_back(parse_scalar(in, allow_inf));
    if (in.accept('|')) tail = parse_scalar(in, allow_inf);
  }
  in.expect(']');
  if (tail) return ComplexElement::sequence(std::move(prefix), *tail);
  return ComplexElement::finite(std::move(prefix));
}

}  // namespace detail

Complex parse_complex(std::string_view text) {
  detail::TextCursor in(text);
  Complex v = detail::parse_scalar(in, false);
  in.expect_end();
  return v;
}

ComplexElement parse_element(std::string_view text) {
  detail::TextCursor in(text);
  auto z = detail::parse_element_literal(in, false);
  in.expect_end();
  return z;
}

RealElement parse_real_element(std::string_view text) {
  detail::TextCursor in(text);
  auto z = detail::parse_element_literal(in, false);
  in.expect_end();
  for (std::size_t s = 0; s < z.slot_count(); ++s)
    if (slot_value(z, s, z.slot_count()).imag() != 0)
      throw ParseError(1, 1, "imaginary part in a real literal (coordinate " + std::to_string(s) + ")");
  return real_part(z);
}

ExtendedPositive parse_extended(std::string_view text) {
  detail::TextCursor in(text);
  auto z = detail::parse_element_literal(in, true);
  in.expect_end();
  if (!z.is_finite()) throw InvalidExtended("extended literals use the finite model");
  std::vector<double> coords;
  for (const auto& v : z.stored()) {
    if (v.imag() != 0) throw InvalidExtended("extended coordinates are real");
    coords.push_back(v.real());
  }
  return ExtendedPositive(std::move(coords));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_rational(const Rational& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

std::string format_complex(const Complex& v) {
  if (v.imag() == 0) return format_double(v.real());
  const std::string im = format_double(std::fabs(v.imag())) + "i";
  if (v.real() == 0) return (v.imag() < 0 ? "-" : "") + im;
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + im;
}

namespace {

template <class T, class F>
std::string format_with(const Element<T>& x, F fmt) {
  std::string out = "[";
  for (std::size_t k = 0; k < x.stored().size(); ++k) {
    if (k) out += ",";
    out += fmt(x.stored()[k]);
  }
  if (!x.is_finite()) out += "|" + fmt(x.tail());
  return out + "]";
}

}  // namespace

std::string format_element(const RealElement& x) { return format_with(x, format_double); }
std::string format_element(const ComplexElement& z) { return format_with(z, format_complex); }
std::string format_element(const ExactElement& q) { return format_with(q, format_rational); }
std::string format_extended(const ExtendedPositive& u) { return format_element(u.as_real()); }

}  // namespace ordcx
