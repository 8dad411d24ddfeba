#pragma once

// Flattened evaluation of an expression DAG at a single coordinate, generic in the scalar type.

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ordcx/expr.hpp"

namespace ordcx::detail {

class Tape {
 public:
  struct Op {
    Expr::Kind kind;
    int a = -1;
    int b = -1;
    Complex s{0.0, 0.0};
    const ComplexElement* element = nullptr;
    unsigned n = 0;
    const Expr* source = nullptr;
  };

  explicit Tape(const Expr& f) : root_(f) { index(root_); }
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  const std::vector<Op>& ops() const noexcept { return ops_; }
  const std::vector<const ComplexElement*>& elements() const noexcept { return elements_; }

  /// Slot layout shared by z and every element constant.
  std::size_t slot_count(const ComplexElement& z) const {
    if (z.is_finite()) {
      for (auto* e : elements_) require_same_model(e->model(), z.model());
      return z.model().dimension();
    }
    std::size_t prefix = z.stored().size();
    for (auto* e : elements_) {
      require_same_model(e->model(), z.model());
      prefix = std::max(prefix, e->stored().size());
    }
    return prefix + 1;
  }

  /// conv: Complex -> S; is_zero: S -> bool. Throws OutsideDomain at an inverse of zero.
  template <class S, class Conv, class IsZero>
  S run(const S& z, std::size_t coord, Conv conv, IsZero is_zero, std::vector<S>& v) const {
    v.resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const Op& op = ops_[i];
      switch (op.kind) {
        case Expr::Kind::Var:
          v[i] = z;
          break;
        case Expr::Kind::Const:
          v[i] = op.element ? conv((*op.element)[coord]) : conv(op.s);
          break;
        case Expr::Kind::Add:
          v[i] = v[op.a] + v[op.b];
          break;
        case Expr::Kind::ScalarMul:
          v[i] = conv(op.s) * v[op.a];
          break;
        case Expr::Kind::Mul:
          v[i] = v[op.a] * v[op.b];
          break;
        case Expr::Kind::Inv:
          if (is_zero(v[op.a])) throw OutsideDomain(to_string(op.source->child()), coord);
          v[i] = conv(Complex(1.0)) / v[op.a];
          break;
        case Expr::Kind::IntPow: {
          S base = v[op.a];
          S acc = conv(Complex(1.0));
          for (unsigned e = op.n; e; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
          }
          v[i] = acc;
          break;
        }
      }
    }
    return v.back();
  }

 private:
  int index(const Expr& e) {
    auto it = seen_.find(e.identity());
    if (it != seen_.end()) return it->second;
    Op op{e.kind()};
    op.source = &e;
    const auto& ch = e.children();
    if (!ch.empty()) op.a = index(ch[0]);
    if (ch.size() > 1) op.b = index(ch[1]);
    op.s = e.scalar();
    op.n = e.exponent();
    if (e.element()) {
      op.element = &*e.element();
      elements_.push_back(op.element);
    }
    ops_.push_back(op);
    const int id = int(ops_.size() - 1);
    seen_[e.identity()] = id;
    return id;
  }

  Expr root_;
  std::vector<Op> ops_;
  std::vector<const ComplexElement*> elements_;
  std::unordered_map<const void*, int> seen_;
};

}  // namespace ordcx::detail
