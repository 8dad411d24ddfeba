#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordcx/diffcheck.hpp"
#include "ordcx/element.hpp"

namespace ordcx {

/// Exact complex scalars with rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i = Rational(0)) : re(r), im(i) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

using GaussianElement = Element<GaussianRational>;

std::string format_gaussian(const GaussianRational& v);
std::string format_element(const GaussianElement& z);

/// Verdict line plus witness text for one reproduction.
struct CounterexampleReport {
  std::string name;
  bool reproduced = false;
  std::vector<std::string> witness;
};

// Shift map on eventually constant sequences: identity where every |z_k| < 1, left shift otherwise.
ExactElement shift_map(const ExactElement& z);
/// h_n = (0, ..., 0 [n zeros], tail 2).
ExactElement shift_witness_direction(std::size_t n);
/// super_check of the shift map at 0 with derivative e along h_n. Requires n >= 1.
SuperCheckResult<Rational> shift_witness(std::size_t n);
CounterexampleReport shift_not_super_differentiable(std::size_t n = 3);

// Swap (z, w) -> (w, z) on C^2.
GaussianElement swap_map(const GaussianElement& z);
/// super_check of the swap at 0 against candidate derivative f0 along the given directions.
SuperCheckResult<GaussianRational> swap_witness(const GaussianElement& f0, const std::vector<GaussianElement>& hs);
CounterexampleReport swap_not_differentiable_c2();

// The net f_{k,l}: k leading ones, then tail 1/l (l >= 1), and g_k: k zeros, then tail 1.
ExactElement f_kl(std::size_t k, std::size_t l);
ExactElement g_k(std::size_t k);

struct UnboundedWitness {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t index = 0;
  Rational value{0};  // the inverse at `index`
  Rational bound{0};  // u at `index`
};

/// l = ceil(t) + l0 + 1 for u with tail t; f_{k0,l}^{-1} exceeds u at index max(k0 + 1, prefix length of u).
UnboundedWitness fkl_unbounded_witness(const ExactElement& u, std::size_t k0, std::size_t l0);
CounterexampleReport fkl_inverse_net_diverges();

/// k = max(K, ceil(t)) + 1; z_k^{-1} = f_{k,k}^{-1} exceeds u at index max(k, prefix length of u).
UnboundedWitness linf_witness(const ExactElement& u, std::size_t K);
CounterexampleReport linf_inversion_not_sigma_continuous();

struct FiniteContrast {
  bool converges = false;  // inverses converge under a harmonic regulator
  bool bounded = false;    // every inverse lies below the bound
  ExactElement bound = ExactElement::zero(Model::finite(1));
  std::size_t checked = 0;
};

/// z_n = c + d/(n+1) in Q^dim with c >= 1, d > 0: z_n^{-1} -> c^{-1} exactly.
FiniteContrast finite_inversion_contrast(std::size_t dim = 8, std::size_t depth = 64);

/// The point (1,0) + (s1/2, 0) for an invertible positive radius s = (s1, s2).
ExactElement disk_witness(const ExactElement& s);
CounterexampleReport disk_strict_inequality_not_open();

std::vector<std::string> counterexample_names();
/// `name` is one of counterexample_names() or "all". Throws std::invalid_argument on other names.
std::vector<CounterexampleReport> run_counterexamples(const std::string& name);
std::string format_counterexample(const CounterexampleReport& r);

}  // namespace ordcx
