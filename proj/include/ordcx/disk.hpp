#pragma once

#include <variant>

#include "ordcx/element.hpp"
#include "ordcx/extended.hpp"

namespace ordcx {

struct OrderDisk {
  ComplexElement center;
  std::variant<RealElement, ExtendedPositive> radius;
  bool open = true;

  static OrderDisk open_disk(ComplexElement c, RealElement r) { return {std::move(c), std::move(r), true}; }
  static OrderDisk closed_disk(ComplexElement c, RealElement r) { return {std::move(c), std::move(r), false}; }
  static OrderDisk open_disk(ComplexElement c, ExtendedPositive r) { return {std::move(c), std::move(r), true}; }
  static OrderDisk closed_disk(ComplexElement c, ExtendedPositive r) { return {std::move(c), std::move(r), false}; }
};

/// Finite radius r: open means |z-c| << r, closed means |z-c| <= r.
/// Extended radius rho: coordinates with rho = inf are unconstrained, 0 < rho < inf is
/// strict (open) or non-strict (closed), and rho = 0 pins the coordinate to the center.
/// Throws InvalidRadius for an open finite disk whose radius is not positive and invertible.
bool disk_membership(const ComplexElement& z, const OrderDisk& d);

}  // namespace ordcx
