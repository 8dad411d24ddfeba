#pragma once

#include <cstddef>

#include "ordcx/band.hpp"
#include "ordcx/element.hpp"

namespace ordcx {

/// Coordinatewise Euclidean modulus.
RealElement modulus(const ComplexElement& z);

/// Coordinatewise max of cos(t)x + sin(t)y over t = 2*pi*j/grid_points, j = 0..grid_points-1.
RealElement modulus_square_mean(const RealElement& x, const RealElement& y, std::size_t grid_points = 4096);

template <class T>
std::optional<std::size_t> first_zero(const Element<T>& z) {
  for (std::size_t k = 0; k < z.stored().size(); ++k)
    if (z.stored()[k] == T(0)) return k;
  if (!z.is_finite() && z.tail() == T(0)) return z.stored().size();
  return std::nullopt;
}

template <class T>
bool is_invertible(const Element<T>& z) {
  return !first_zero(z).has_value();
}

template <class T>
Element<T> inverse(const Element<T>& z) {
  if (auto k = first_zero(z)) throw NotInvertible(*k);
  return z.map([](const T& v) { return T(1) / v; });
}

/// Reciprocal on the support of z, zero elsewhere.
template <class T>
Element<T> pseudo_inverse(const Element<T>& z) {
  return z.map([](const T& v) { return v == T(0) ? T(0) : T(1) / v; });
}

/// b << a: a - b is positive and invertible.
template <class T>
bool strictly_dominates(const Element<T>& a, const Element<T>& b) {
  const auto d = a - b;
  return is_positive(d) && is_invertible(d);
}

RealElement nth_root(const RealElement& x, unsigned n);

}  // namespace ordcx
