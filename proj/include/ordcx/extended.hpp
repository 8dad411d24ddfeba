#pragma once

// Positive elements of the sup-completion over the finite model: coordinates in [0, +inf].

#include <cstddef>
#include <limits>
#include <vector>

#include "ordcx/band.hpp"
#include "ordcx/element.hpp"

namespace ordcx {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class ExtendedPositive {
 public:
  /// Throws InvalidExtended on a negative or NaN coordinate.
  explicit ExtendedPositive(std::vector<double> coords);
  /// Throws InvalidExtended for the sequence model or a negative coordinate.
  static ExtendedPositive from(const RealElement& x);
  static ExtendedPositive constant(std::size_t dimension, double value);
  static ExtendedPositive infinity(std::size_t dimension) { return constant(dimension, kInf); }

  Model model() const { return Model::finite(coords_.size()); }
  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<double>& coords() const noexcept { return coords_; }
  double operator[](std::size_t k) const { return coords_.at(k); }
  bool is_finite_everywhere() const;

  /// Same coordinates as a RealElement (infinities included).
  RealElement as_real() const { return RealElement::finite(coords_); }

  friend bool operator==(const ExtendedPositive&, const ExtendedPositive&) = default;

 private:
  std::vector<double> coords_;
};

struct ThreePartDecomposition {
  Band finite_band;
  Band infinite_band;
  Band disjoint_band;

  /// Pairwise disjoint and exhaustive.
  bool partitions() const;
};

/// +inf where u is infinite, 0 elsewhere.
ExtendedPositive infinite_part(const ExtendedPositive& u);
/// u where finite, 0 where infinite.
RealElement finite_part(const ExtendedPositive& u);
/// P_u: the band generated by u.
Band band_projection_from(const ExtendedPositive& u);
/// Extension of a band projection to the completion: mask y by b, infinities kept on b.
ExtendedPositive extend_projection(const Band& b, const ExtendedPositive& y);
ThreePartDecomposition three_part_decompose(const ExtendedPositive& u);

/// Coordinatewise product with 0*inf = 0.
ExtendedPositive ext_mul(const ExtendedPositive& x, const ExtendedPositive& y);
ExtendedPositive ext_add(const ExtendedPositive& x, const ExtendedPositive& y);
ExtendedPositive ext_scale(double m, const ExtendedPositive& x);
ExtendedPositive ext_inf(const ExtendedPositive& x, const ExtendedPositive& y);
ExtendedPositive ext_sup(const ExtendedPositive& x, const ExtendedPositive& y);
bool ext_le(const ExtendedPositive& x, const ExtendedPositive& y);
/// 1/x on (0, inf), 0 -> inf, inf -> 0.
ExtendedPositive generalized_inverse(const ExtendedPositive& x);

}  // namespace ordcx
