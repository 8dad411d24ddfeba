#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcx/element.hpp"
#include "ordcx/extended.hpp"
#include "ordcx/family.hpp"

namespace ordcx {

// ---------------------------------------------------------------------------
// Regulators and certificates

/// Closed-form decreasing regulator q_m with inf_m q_m = 0 by construction.
template <class R>
class Regulator {
 public:
  enum class Kind { Harmonic, Geometric, ShiftedTail };

  /// q_m = base / (m + 1)
  static Regulator harmonic(Element<R> base) { return Regulator(Kind::Harmonic, std::move(base), R(0)); }
  /// q_m = base * q^m, 0 < q < 1
  static Regulator geometric(Element<R> base, R q) {
    if (!(R(0) < q && q < R(1))) throw std::invalid_argument("geometric regulator needs 0 < q < 1");
    return Regulator(Kind::Geometric, std::move(base), q);
  }
  /// Sequence model: q_m = base * g_m, g_m = m zeros followed by ones.
  static Regulator shifted_tail(Element<R> base) {
    if (base.is_finite()) throw std::invalid_argument("shifted-tail regulator lives in the sequence model");
    return Regulator(Kind::ShiftedTail, std::move(base), R(0));
  }

  Kind kind() const noexcept { return kind_; }
  const Element<R>& base() const noexcept { return base_; }

  Element<R> at(std::size_t m) const {
    switch (kind_) {
      case Kind::Harmonic:
        return base_.map([m](const R& v) { return v / R(static_cast<long long>(m + 1)); });
      case Kind::Geometric: {
        R f(1);
        for (std::size_t j = 0; j < m; ++j) f = f * q_;
        return base_.map([&](const R& v) { return v * f; });
      }
      case Kind::ShiftedTail: {
        std::vector<R> prefix(m, R(0));
        return base_ * Element<R>(base_.model(), std::move(prefix), R(1));
      }
    }
    return base_;
  }

 private:
  Regulator(Kind kind, Element<R> base, R q) : kind_(kind), base_(std::move(base)), q_(q) {
    if (!is_positive(base_)) throw std::invalid_argument("regulator base must be positive");
  }

  Kind kind_;
  Element<R> base_;
  R q_;
};

template <class R>
struct ConvergenceCertificate {
  Regulator<R> regulator;
  /// N(m): from this index on, |z_n - z| <= q_m.
  std::function<std::size_t(std::size_t)> threshold;
  /// Levels m to check.
  std::vector<std::size_t> levels;
};

struct CertificateViolation {
  std::size_t level;
  std::size_t index;
  std::size_t coordinate;
};

struct CertificateVerdict {
  bool confirmed = true;
  std::optional<CertificateViolation> violation;
  std::size_t checked = 0;
};

/// Checks |z_n - limit| <= q_m for every declared level m and N(m) <= n <= check_depth.
template <class T>
CertificateVerdict verify_certificate(const std::function<Element<T>(std::size_t)>& seq, const Element<T>& limit,
                                      const ConvergenceCertificate<real_t<T>>& cert, std::size_t check_depth) {
  for (auto m : cert.levels)
    if (cert.threshold(m) > check_depth)
      throw DepthTooSmall("check depth " + std::to_string(check_depth) + " is below threshold N(" +
                          std::to_string(m) + ") = " + std::to_string(cert.threshold(m)));
  CertificateVerdict out;
  for (auto m : cert.levels) {
    const auto q = cert.regulator.at(m);
    for (std::size_t n = cert.threshold(m); n <= check_depth; ++n) {
      const auto dist = modulus_of(seq(n) - limit);
      ++out.checked;
      if (auto k = first_violation_of_le(dist, q)) {
        out.confirmed = false;
        out.violation = CertificateViolation{m, n, *k};
        return out;
      }
    }
  }
  return out;
}

struct NetViolation {
  std::size_t level;
  std::pair<std::size_t, std::size_t> index;
  std::size_t coordinate;
};

struct NetCertificateVerdict {
  bool confirmed = true;
  std::optional<NetViolation> violation;
  std::size_t checked = 0;
};

/// Nets over N x N with the product order: checks every (k, l) >= N(m) inside [0, check_depth]^2.
template <class T>
NetCertificateVerdict verify_net_certificate(
    const std::function<Element<T>(std::size_t, std::size_t)>& net, const Element<T>& limit,
    const Regulator<real_t<T>>& regulator,
    const std::function<std::pair<std::size_t, std::size_t>(std::size_t)>& threshold,
    const std::vector<std::size_t>& levels, std::size_t check_depth) {
  for (auto m : levels) {
    const auto [k0, l0] = threshold(m);
    if (k0 > check_depth || l0 > check_depth)
      throw DepthTooSmall("check depth " + std::to_string(check_depth) + " is below the threshold of level " +
                          std::to_string(m));
  }
  NetCertificateVerdict out;
  for (auto m : levels) {
    const auto q = regulator.at(m);
    const auto [k0, l0] = threshold(m);
    for (std::size_t k = k0; k <= check_depth; ++k)
      for (std::size_t l = l0; l <= check_depth; ++l) {
        ++out.checked;
        if (auto c = first_violation_of_le(modulus_of(net(k, l) - limit), q)) {
          out.confirmed = false;
          out.violation = NetViolation{m, {k, l}, *c};
          return out;
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// limsup of real sequences

/// One coordinate of a real sequence x_n, n >= 0.
struct SequenceTerm {
  enum class Kind { Periodic, Harmonic, Custom };
  Kind kind = Kind::Periodic;
  std::vector<double> values;  // Periodic: x_n = values[n % size]
  double a = 0, b = 0, s = 1;  // Harmonic: x_n = a + b / (n + s), s > 0
  std::function<double(std::size_t)> custom;

  static SequenceTerm periodic(std::vector<double> values);
  static SequenceTerm constant(double v) { return periodic({v}); }
  static SequenceTerm harmonic(double a, double b, double s = 1);
  static SequenceTerm from(std::function<double(std::size_t)> f);

  double operator()(std::size_t n) const;
};

class RealSequence {
 public:
  explicit RealSequence(std::vector<SequenceTerm> terms);
  std::size_t dimension() const noexcept { return terms_.size(); }
  const std::vector<SequenceTerm>& terms() const noexcept { return terms_; }
  RealElement operator()(std::size_t n) const;

 private:
  std::vector<SequenceTerm> terms_;
};

struct LimsupResult {
  RealElement value;
  bool exact;
  /// Change of the numeric estimate between depth/2 and depth (zero on exact coordinates).
  RealElement last_delta;
};

inline constexpr double kOverflowGuard = 1e300;

/// Exact for periodic and harmonic coordinates, numeric (max over [depth, 2 depth]) for custom ones.
/// Throws Unbounded when a running supremum passes the overflow guard.
LimsupResult limsup_bounded(const RealSequence& seq, std::size_t depth = 10000);

// ---------------------------------------------------------------------------
// Cauchy-Hadamard

/// L = limsup |a_n|^(1/n), from family metadata.
ExtendedPositive root_limsup(const CoefficientFamily& fam);

struct RadiusReport {
  ExtendedPositive L;
  ExtendedPositive rho;
  RealElement rho_F;
  ExtendedPositive rho_infty;
  ThreePartDecomposition L_bands;
  ThreePartDecomposition rho_bands;
  bool rho_is_inverse_of_L;      // rho = generalized_inverse(L)
  bool dual_L_is_rho_infty;      // B_L^d = B_{rho_infty}
  bool L_infty_is_dual_rho;      // B_{L_infty} = B_rho^d
  bool pseudo_L_F_is_rho_F;      // (L_F)* = rho_F

  bool identities_hold() const {
    return rho_is_inverse_of_L && dual_L_is_rho_infty && L_infty_is_dual_rho && pseudo_L_F_is_rho_F;
  }
};

RadiusReport cauchy_hadamard(const CoefficientFamily& fam);
/// Labeled plain text; first line `L=... rho=...`.
std::string format_radius_report(const RadiusReport& report);

// ---------------------------------------------------------------------------
// Spectrum of convergence

enum class Membership { In, Out, Boundary };
std::string to_string(Membership m);

struct SpectrumVerdict {
  Membership membership = Membership::Boundary;
  ExtendedPositive product;  // L * r
  std::optional<std::size_t> witness_coordinate;
  std::optional<std::size_t> witness_index;  // n with |a_n| r^n > 1
  std::size_t cutoff = 0;                    // k with sum_{n>k} |a_n| r^n < tol
  double tail_bound = kInf;
  bool uniform_verified = false;
};

inline constexpr std::size_t kDefaultSeriesTerms = 10000;
inline constexpr double kDefaultTailTolerance = 1e-9;

SpectrumVerdict spectrum_membership(const CoefficientFamily& fam, const ComplexElement& c, const RealElement& r,
                                    double tail_tolerance = kDefaultTailTolerance,
                                    std::size_t max_terms = kDefaultSeriesTerms);

/// Per coordinate, suffix sums S_n = sum_{m>=n} |a_m| r^m over n = 0..max_terms+1 (the last entry
/// is the geometric remainder estimate beyond max_terms; inf when no contraction is visible).
std::vector<std::vector<double>> tail_sums(const CoefficientFamily& fam, const RealElement& r,
                                           std::size_t max_terms = kDefaultSeriesTerms);

struct SeriesValue {
  SpectrumVerdict verdict;
  ComplexElement value;  // meaningful when IN
  std::size_t terms = 0;
};

/// sum_{n < terms} a_n (z - c)^n
ComplexElement partial_sum(const CoefficientFamily& fam, const ComplexElement& c, const ComplexElement& z,
                           std::size_t terms);

/// Classifies r = |z - c| and, when IN, sums until the remaining tail is below round-off.
SeriesValue evaluate_series(const CoefficientFamily& fam, const ComplexElement& c, const ComplexElement& z,
                            double tail_tolerance = kDefaultTailTolerance);

}  // namespace ordcx
