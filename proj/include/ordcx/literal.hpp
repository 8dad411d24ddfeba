#pragma once

// Element literals: finite `[1+2i, 0, -3]`, sequence `[1, 1 | 0.5]`, extended `[2, inf, 0]`.

#include <string>
#include <string_view>

#include "ordcx/element.hpp"
#include "ordcx/extended.hpp"

namespace ordcx {

Complex parse_complex(std::string_view text);
ComplexElement parse_element(std::string_view text);
/// Rejects literals with a nonzero imaginary part.
RealElement parse_real_element(std::string_view text);
/// Finite model only; `inf` allowed, negative coordinates rejected with InvalidExtended.
ExtendedPositive parse_extended(std::string_view text);

/// Shortest round-trip decimal; `inf`, `-inf`, `nan`; negative zero prints as 0.
std::string format_double(double v);
std::string format_rational(const Rational& v);
std::string format_complex(const Complex& v);

std::string format_element(const RealElement& x);
std::string format_element(const ComplexElement& z);
std::string format_element(const ExactElement& q);
std::string format_extended(const ExtendedPositive& u);

}  // namespace ordcx
