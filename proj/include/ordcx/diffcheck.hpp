#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordcx/convergence.hpp"
#include "ordcx/disk.hpp"
#include "ordcx/element.hpp"
#include "ordcx/expr.hpp"
#include "ordcx/family.hpp"

namespace ordcx {

inline constexpr unsigned kDefaultCheckDepth = 20;
inline constexpr double kDefaultCheckTolerance = 1e-8;

struct DirectionTrace {
  Complex lambda;
  /// ratios[k-1] = |f(c+h_k) - f(c) - h_k f'(c)| / |h_k| for h_k = lambda r / 2^k.
  std::vector<RealElement> ratios;
  /// |f(c+h_k) - f(c)|
  std::vector<RealElement> displacements;
  bool monotone = true;
};

struct DerivativeCheckReport {
  ComplexElement point = ComplexElement::zero(Model::finite(1));
  RealElement radius = RealElement::zero(Model::finite(1));
  ComplexElement derivative = ComplexElement::zero(Model::finite(1));
  unsigned depth = kDefaultCheckDepth;
  double tol = kDefaultCheckTolerance;
  std::vector<DirectionTrace> directions;
  /// Worst final ratio over directions, per coordinate.
  RealElement worst_final = RealElement::zero(Model::finite(1));
  bool monotone = true;
  bool below_tol = true;
  bool continuity = true;
  std::string failure;

  bool pass() const { return monotone && below_tol; }
};

/// Per coordinate min(1e-3/(1+|f'(c)|+|f''(c)|), |g(c)|/(4(1+|g'(c)|)) over inverted subterms g).
RealElement default_check_radius(const Expr& f, const ComplexElement& c);

/// Residual ratios along h_k = lambda r/2^k, lambda in {1, i, -1, -i}, k = 1..depth, evaluated in
/// binary128. Ratios must be nonincreasing from the second step on (slack 1e-9 relative plus
/// 1e-3 tol) and end below tol. Throws OutsideDomain, InvalidRadius.
DerivativeCheckReport difference_quotient_check(const Expr& f, const ComplexElement& c,
                                                const std::optional<RealElement>& r = std::nullopt,
                                                unsigned depth = kDefaultCheckDepth,
                                                double tol = kDefaultCheckTolerance);
/// Same, against a caller-supplied derivative expression.
DerivativeCheckReport difference_quotient_check(const Expr& f, const Expr& derivative, const ComplexElement& c,
                                                const std::optional<RealElement>& r = std::nullopt,
                                                unsigned depth = kDefaultCheckDepth,
                                                double tol = kDefaultCheckTolerance);

std::string format_check_report(const DerivativeCheckReport& report);

// ---------------------------------------------------------------------------
// Power series

/// b_n = (n+1) a_{n+1}
CoefficientFamily series_derivative(const CoefficientFamily& fam);

struct SeriesCheckReport {
  ComplexElement f_value = ComplexElement::zero(Model::finite(1));  // truncated sum at z0
  ComplexElement g_value = ComplexElement::zero(Model::finite(1));  // truncated derivative sum at z0
  std::size_t terms = 0;
  /// Comparison radius r with |z0-c| < r < rho.
  RealElement comparison_radius = RealElement::zero(Model::finite(1));
  /// sum_k |a_k| k(k-1) r^(k-2), per coordinate.
  RealElement second_order_sum = RealElement::zero(Model::finite(1));
  bool second_order_converges = false;
  /// residual_k <= 1/2 |h_k|^2 * second_order_sum on every step.
  bool bound_ok = false;
  DerivativeCheckReport check;

  bool pass() const { return second_order_converges && bound_ok && check.pass(); }
};

/// Throws OutsideOpenDisk unless z0 lies in the open disk of convergence (and rho has no zero coordinate).
SeriesCheckReport series_derivative_check(const CoefficientFamily& fam, const ComplexElement& c,
                                          const ComplexElement& z0, unsigned depth = kDefaultCheckDepth,
                                          double tol = kDefaultCheckTolerance);

// ---------------------------------------------------------------------------
// Holomorphy

struct HolomorphyReport {
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::vector<ComplexElement> points;
  std::optional<std::size_t> first_failure;
  std::string failure;

  bool pass() const { return samples > 0 && passed == samples; }
};

/// Deterministic sample points of an open disk: center + 0.95 R sqrt(U) e^{i theta} per coordinate
/// (R = 1 on coordinates with infinite extended radius).
std::vector<ComplexElement> sample_disk(const OrderDisk& region, std::size_t count, std::uint64_t seed);

HolomorphyReport holomorphy_report(const Expr& f, const OrderDisk& region, std::size_t sample_count = 25,
                                   unsigned depth = kDefaultCheckDepth, double tol = kDefaultCheckTolerance,
                                   std::uint64_t seed = 0);
HolomorphyReport holomorphy_report(const CoefficientFamily& fam, const ComplexElement& c, const OrderDisk& region,
                                   std::size_t sample_count = 25, unsigned depth = kDefaultCheckDepth,
                                   double tol = kDefaultCheckTolerance, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Super differentiability witnesses

template <class T>
struct SuperCheckResult {
  bool refuted = false;
  std::size_t witness = 0;
  std::size_t coordinate = 0;
  std::optional<Element<T>> residual;
};

/// Tests |f(c+h) - f(c) - h f_c| <= |h| q for witness directions h. A residual that is nonzero where
/// h vanishes defeats every q, which refutes the inequality for that witness.
template <class T>
SuperCheckResult<T> super_check(const std::function<Element<T>(const Element<T>&)>& f, const Element<T>& c,
                                const Element<T>& fc, const std::vector<Element<T>>& witnesses) {
  SuperCheckResult<T> out;
  const Element<T> fc0 = f(c);
  for (std::size_t n = 0; n < witnesses.size(); ++n) {
    const auto& h = witnesses[n];
    const Element<T> residual = f(c + h) - fc0 - h * fc;
    const std::size_t slots = joint_slots(residual, h);
    for (std::size_t s = 0; s < slots; ++s) {
      if (!(slot_value(residual, s, slots) == T(0)) && slot_value(h, s, slots) == T(0)) {
        out.refuted = true;
        out.witness = n;
        out.coordinate = s;
        out.residual = residual;
        return out;
      }
    }
  }
  return out;
}

}  // namespace ordcx
