#include "ordcx/disk.hpp"

#include <cmath>

#include "ordcx/lattice.hpp"

namespace ordcx {

bool disk_membership(const ComplexElement& z, const OrderDisk& d) {
  const RealElement dist = modulus(z - d.center);
  if (const auto* r = std::get_if<RealElement>(&d.radius)) {
    if (!is_positive(*r)) throw InvalidRadius("disk radius must be positive");
    if (d.open) {
      if (!is_invertible(*r)) throw InvalidRadius("open disk radius must be invertible");
      return strictly_dominates(*r, dist);
    }
    return leq(dist, *r);
  }
  const auto& rho = std::get<ExtendedPositive>(d.radius);
  require_same_model(rho.model(), dist.model());
  for (std::size_t k = 0; k < rho.dimension(); ++k) {
    const double p = rho[k];
    const double t = dist[k];
    if (std::isinf(p)) continue;
    if (p == 0) {
      if (t != 0) return false;
      continue;
    }
    if (d.open ? !(t < p) : !(t <= p)) return false;
  }
  return true;
}

}  // namespace ordcx
