#pragma once

// Expression trees over the algebra operations: the variable z, constants, +, scalar *, *, inverse, z^k.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordcx/element.hpp"

namespace ordcx {

class Expr {
 public:
  enum class Kind { Var, Const, Add, ScalarMul, Mul, Inv, IntPow };

  Expr();  // the variable z

  static Expr var();
  static Expr constant(Complex c);
  static Expr constant(ComplexElement c);

  // Smart constructors; fold scalar constants and neutral elements.
  static Expr add(const Expr& a, const Expr& b);
  static Expr sub(const Expr& a, const Expr& b);
  static Expr neg(const Expr& a);
  static Expr scale(Complex s, const Expr& a);
  static Expr mul(const Expr& a, const Expr& b);
  static Expr inv(const Expr& a);
  static Expr pow(const Expr& a, unsigned n);
  static Expr div(const Expr& a, const Expr& b) { return mul(a, inv(b)); }

  Kind kind() const;
  /// Const scalar value or ScalarMul factor.
  Complex scalar() const;
  /// Element constant, if this is one.
  const std::optional<ComplexElement>& element() const;
  unsigned exponent() const;
  const std::vector<Expr>& children() const;
  const Expr& child(std::size_t i = 0) const { return children().at(i); }

  bool is_scalar_constant() const;
  bool is_scalar_constant(Complex v) const;
  bool contains_inverse() const;
  std::size_t node_count() const;
  /// Arguments of every Inv node.
  std::vector<Expr> inverse_arguments() const;
  /// Node identity; shared subtrees compare equal.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind kind, std::vector<Expr> children, Complex s = 0.0, unsigned exponent = 0);
  std::shared_ptr<const Node> node_;
};

/// `z`, numbers with an optional `i` suffix, `i`, `[..]` element literals, `inv(..)`, `^k`, `+ - * /`, parentheses.
Expr parse_expr(std::string_view text);
/// Re-parses to an equal tree.
std::string to_string(const Expr& f);

/// Coordinatewise evaluation; throws OutsideDomain naming the inverted subterm and a coordinate.
ComplexElement eval(const Expr& f, const ComplexElement& z);
Expr symbolic_derivative(const Expr& f);
/// f(g(z))
Expr compose(const Expr& f, const Expr& g);

}  // namespace ordcx
