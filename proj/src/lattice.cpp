#include "ordcx/lattice.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace ordcx {

RealElement modulus(const ComplexElement& z) {
  return modulus_of(z);
}

RealElement modulus_square_mean(const RealElement& x, const RealElement& y, std::size_t grid_points) {
  if (grid_points < 4) throw std::invalid_argument("modulus_square_mean needs at least 4 grid points");
  std::vector<double> c(grid_points), s(grid_points);
  // j / G rounds the same rational identically, so nested grids share their angles
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double t = 2.0 * std::numbers::pi * (double(j) / double(grid_points));
    c[j] = std::cos(t);
    s[j] = std::sin(t);
  }
  // exact values on the axes keep x=1,y=0 style inputs exact
  for (std::size_t q = 0; q < 4; ++q) {
    if ((q * grid_points) % 4 != 0) continue;
    const std::size_t j = q * grid_points / 4;
    const double cs[4] = {1, 0, -1, 0};
    const double sn[4] = {0, 1, 0, -1};
    c[j] = cs[q];
    s[j] = sn[q];
  }
  return zip_with(x, y, [&](double a, double b) {
    double best = a;
    for (std::size_t j = 0; j < grid_points; ++j) best = std::max(best, c[j] * a + s[j] * b);
    return best;
  });
}

RealElement nth_root(const RealElement& x, unsigned n) {
  if (n == 0) throw std::invalid_argument("nth_root needs n >= 1");
  if (auto k = first_violation_of_le(RealElement::zero(x.model()), x))
    throw NegativeInput("nth_root of a non-positive element (coordinate " + std::to_string(*k) + ")");
  return x.map([n](double v) {
    if (n == 1) return v;
    if (n == 2) return std::sqrt(v);
    if (n == 3) return std::cbrt(v);
    return std::pow(v, 1.0 / double(n));
  });
}

}  // namespace ordcx
