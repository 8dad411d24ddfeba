#pragma once

// Coefficient families a_n with closed-form n-th root asymptotics, one stream per coordinate.
//
// Every coordinate is a finite table t[0..m) followed by the closed-form term
//   a_n = scale * P(n) * ratio^n * (n!)^p,   p in {-1, 0, 1},
// which covers geometric, polynomial-geometric, inverse-factorial and factorial
// streams and is closed under term-by-term differentiation.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordcx/element.hpp"
#include "ordcx/extended.hpp"

namespace ordcx {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);  // coeffs[j] multiplies n^j
  static Polynomial constant(double c) { return Polynomial({c}); }
  /// (n+1)^d
  static Polynomial shifted_power(unsigned d);

  double operator()(double n) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Q(n) = P(n+1)
  Polynomial shift() const;
  Polynomial times_n_plus_one(unsigned times = 1) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

enum class TermKind { Zero, Geometric, PolyGeometric, InverseFactorial, Factorial, General };

struct CoordinateFamily {
  std::vector<Complex> table;
  Complex scale{1.0, 0.0};
  Polynomial poly = Polynomial::constant(1.0);
  double ratio = 1.0;
  int factorial_power = 0;

  static CoordinateFamily zero();
  static CoordinateFamily geometric(double r);
  /// (n+1)^degree * r^n
  static CoordinateFamily poly_geometric(unsigned degree, double r);
  static CoordinateFamily inverse_factorial();
  static CoordinateFamily factorial();
  CoordinateFamily with_table(std::vector<Complex> values) const;

  /// Shape of the closed-form part, ignoring the table.
  TermKind kind() const;
  bool tail_vanishes() const;

  Complex coefficient(std::size_t n) const;
  /// log|a_n|; -inf when a_n = 0.
  double log_abs(std::size_t n) const;
  /// limsup |a_n|^(1/n) from the closed form.
  double root_limsup() const;
  /// b_n = (n+1) a_{n+1}
  CoordinateFamily derivative() const;
  /// a_{n+1}/a_n for n beyond the table, from the closed form (0 when a_n = 0).
  double closed_ratio(std::size_t n) const;
};

class CoefficientFamily {
 public:
  explicit CoefficientFamily(std::vector<CoordinateFamily> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  Model model() const { return Model::finite(coords_.size()); }
  const CoordinateFamily& operator[](std::size_t k) const { return coords_.at(k); }
  const std::vector<CoordinateFamily>& coordinates() const noexcept { return coords_; }

  ComplexElement coefficient(std::size_t n) const;
  RealElement abs_coefficient(std::size_t n) const;

  static CoefficientFamily uniform(std::size_t dimension, const CoordinateFamily& c) {
    return CoefficientFamily(std::vector<CoordinateFamily>(dimension, c));
  }

 private:
  std::vector<CoordinateFamily> coords_;
};

/// One coordinate per non-blank line: `geom 0.5`, `polygeom 2 0.5`, `invfact`, `fact`,
/// `table 1,2,3 then geom 0.5`. Lines starting with `#` are ignored.
CoefficientFamily parse_family(std::string_view text);
CoordinateFamily parse_coordinate_family(std::string_view line, std::size_t line_number = 1);

/// Text form; families produced by differentiation print in a generic `term ...` form.
std::string format_coordinate_family(const CoordinateFamily& c);
std::string format_family(const CoefficientFamily& fam);

}  // namespace ordcx
