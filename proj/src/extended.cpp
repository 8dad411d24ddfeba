#include "ordcx/extended.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ordcx {

namespace {

void require_dimension(const ExtendedPositive& x, const ExtendedPositive& y) {
  require_same_model(x.model(), y.model());
}

template <class F>
ExtendedPositive zip(const ExtendedPositive& x, const ExtendedPositive& y, F f) {
  require_dimension(x, y);
  std::vector<double> out(x.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(x[k], y[k]);
  return ExtendedPositive(std::move(out));
}

template <class F>
ExtendedPositive map(const ExtendedPositive& x, F f) {
  std::vector<double> out(x.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(x[k]);
  return ExtendedPositive(std::move(out));
}

double mul(double a, double b) {
  if (a == 0 || b == 0) return 0;
  return a * b;
}

}  // namespace

ExtendedPositive::ExtendedPositive(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidExtended("extended element needs at least one coordinate");
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (std::isnan(coords_[k])) throw InvalidExtended("NaN at coordinate " + std::to_string(k));
    if (coords_[k] < 0) throw InvalidExtended("negative value at coordinate " + std::to_string(k));
    if (coords_[k] == 0) coords_[k] = 0.0;  // drop negative zero
  }
}

ExtendedPositive ExtendedPositive::from(const RealElement& x) {
  if (!x.is_finite()) throw InvalidExtended("extended elements live over the finite model only");
  return ExtendedPositive(x.stored());
}

ExtendedPositive ExtendedPositive::constant(std::size_t dimension, double value) {
  return ExtendedPositive(std::vector<double>(dimension, value));
}

bool ExtendedPositive::is_finite_everywhere() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

bool ThreePartDecomposition::partitions() const {
  return finite_band.disjoint_with(infinite_band) && finite_band.disjoint_with(disjoint_band) &&
         infinite_band.disjoint_with(disjoint_band) && finite_band.unite(infinite_band).unite(disjoint_band).is_full();
}

ExtendedPositive infinite_part(const ExtendedPositive& u) {
  return map(u, [](double v) { return std::isinf(v) ? kInf : 0.0; });
}

RealElement finite_part(const ExtendedPositive& u) {
  return u.as_real().map([](double v) { return std::isinf(v) ? 0.0 : v; });
}

Band band_projection_from(const ExtendedPositive& u) {
  return Band::support_of(u.as_real());
}

ExtendedPositive extend_projection(const Band& b, const ExtendedPositive& y) {
  require_same_model(b.model(), y.model());
  std::vector<double> out(y.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = b.contains(k) ? y[k] : 0.0;
  return ExtendedPositive(std::move(out));
}

ThreePartDecomposition three_part_decompose(const ExtendedPositive& u) {
  const Band finite = Band::support_of(finite_part(u));
  const Band infinite = Band::support_of(infinite_part(u).as_real());
  return {finite, infinite, band_projection_from(u).complement()};
}

ExtendedPositive ext_mul(const ExtendedPositive& x, const ExtendedPositive& y) {
  return zip(x, y, mul);
}

ExtendedPositive ext_add(const ExtendedPositive& x, const ExtendedPositive& y) {
  return zip(x, y, [](double a, double b) { return a + b; });
}

ExtendedPositive ext_scale(double m, const ExtendedPositive& x) {
  if (!(m >= 0)) throw InvalidExtended("scale factor must be nonnegative");
  return map(x, [m](double v) { return mul(m, v); });
}

ExtendedPositive ext_inf(const ExtendedPositive& x, const ExtendedPositive& y) {
  return zip(x, y, [](double a, double b) { return std::min(a, b); });
}

ExtendedPositive ext_sup(const ExtendedPositive& x, const ExtendedPositive& y) {
  return zip(x, y, [](double a, double b) { return std::max(a, b); });
}

bool ext_le(const ExtendedPositive& x, const ExtendedPositive& y) {
  require_dimension(x, y);
  for (std::size_t k = 0; k < x.dimension(); ++k)
    if (!(x[k] <= y[k])) return false;
  return true;
}

ExtendedPositive generalized_inverse(const ExtendedPositive& x) {
  return map(x, [](double v) {
    if (v == 0) return kInf;
    if (std::isinf(v)) return 0.0;
    return 1.0 / v;
  });
}

}  // namespace ordcx
