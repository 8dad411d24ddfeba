#include "ordcx/expr.hpp"

#include <functional>
#include <unordered_map>

#include "expr_eval.hpp"
#include "literal_detail.hpp"
#include "ordcx/literal.hpp"

namespace ordcx {

struct Expr::Node {
  Kind kind = Kind::Var;
  Complex scalar{0.0, 0.0};
  std::optional<ComplexElement> element;
  unsigned exponent = 0;
  std::vector<Expr> children;
};

Expr Expr::make(Kind kind, std::vector<Expr> children, Complex s, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  n->scalar = s;
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr::Expr() {
  static const Expr z = make(Kind::Var, {});
  node_ = z.node_;
}

Expr Expr::var() { return Expr(); }

Expr Expr::constant(Complex c) { return make(Kind::Const, {}, c); }

Expr Expr::constant(ComplexElement c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->element = std::move(c);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
Complex Expr::scalar() const { return node_->scalar; }
const std::optional<ComplexElement>& Expr::element() const { return node_->element; }
unsigned Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

bool Expr::is_scalar_constant() const { return node_->kind == Kind::Const && !node_->element; }
bool Expr::is_scalar_constant(Complex v) const { return is_scalar_constant() && node_->scalar == v; }

Expr Expr::add(const Expr& a, const Expr& b) {
  if (a.is_scalar_constant() && b.is_scalar_constant()) return constant(a.scalar() + b.scalar());
  if (a.is_scalar_constant(0.0)) return b;
  if (b.is_scalar_constant(0.0)) return a;
  return make(Kind::Add, {a, b});
}

Expr Expr::scale(Complex s, const Expr& a) {
  if (s == Complex(0.0)) return constant(0.0);
  if (s == Complex(1.0)) return a;
  if (a.is_scalar_constant()) return constant(s * a.scalar());
  if (a.kind() == Kind::ScalarMul) return scale(s * a.scalar(), a.child());
  return make(Kind::ScalarMul, {a}, s);
}

Expr Expr::neg(const Expr& a) { return scale(-1.0, a); }
Expr Expr::sub(const Expr& a, const Expr& b) { return add(a, neg(b)); }

Expr Expr::mul(const Expr& a, const Expr& b) {
  if (a.is_scalar_constant(0.0) || b.is_scalar_constant(0.0)) return constant(0.0);
  if (a.is_scalar_constant()) return scale(a.scalar(), b);
  if (b.is_scalar_constant()) return scale(b.scalar(), a);
  return make(Kind::Mul, {a, b});
}

Expr Expr::inv(const Expr& a) {
  if (a.is_scalar_constant() && a.scalar() != Complex(0.0)) return constant(1.0 / a.scalar());
  return make(Kind::Inv, {a});
}

Expr Expr::pow(const Expr& a, unsigned n) {
  if (n == 0) return constant(1.0);
  if (n == 1) return a;
  if (a.is_scalar_constant()) {
    Complex v = 1.0;
    for (unsigned j = 0; j < n; ++j) v *= a.scalar();
    return constant(v);
  }
  return make(Kind::IntPow, {a}, 0.0, n);
}

bool Expr::contains_inverse() const {
  if (kind() == Kind::Inv) return true;
  for (const auto& c : children())
    if (c.contains_inverse()) return true;
  return false;
}

std::size_t Expr::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

std::vector<Expr> Expr::inverse_arguments() const {
  std::vector<Expr> out;
  std::unordered_map<const void*, bool> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (!seen.emplace(e.identity(), true).second) return;
    if (e.kind() == Kind::Inv) out.push_back(e.child());
    for (const auto& c : e.children()) walk(c);
  };
  walk(*this);
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.scalar() != b.scalar() || a.exponent() != b.exponent()) return false;
  if (a.element().has_value() != b.element().has_value()) return false;
  if (a.element() && !(*a.element() == *b.element())) return false;
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!(a.children()[i] == b.children()[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : in_(text) {}

  Expr parse() {
    Expr e = expr();
    in_.expect_end();
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    while (true) {
      if (in_.accept('+'))
        e = Expr::add(e, term());
      else if (in_.accept('-'))
        e = Expr::sub(e, term());
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (in_.accept('*'))
        e = Expr::mul(e, unary());
      else if (in_.accept('/'))
        e = Expr::div(e, unary());
      else
        return e;
    }
  }

  Expr unary() {
    if (in_.accept('-')) return Expr::neg(unary());
    if (in_.accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (in_.accept('^')) {
      in_.skip_ws();
      const auto n = in_.integer();
      if (n > 1u << 16) in_.fail("exponent too large");
      return Expr::pow(base, unsigned(n));
    }
    return base;
  }

  Expr atom() {
    in_.skip_ws();
    if (in_.accept('(')) {
      Expr e = expr();
      in_.expect(')');
      return e;
    }
    if (in_.peek() == '[') return Expr::constant(detail::parse_element_literal(in_));
    if (in_.accept_word("z")) return Expr::var();
    if (in_.accept_word("i")) return Expr::constant(Complex(0.0, 1.0));
    if (in_.accept_word("inv")) {
      in_.expect('(');
      Expr e = expr();
      in_.expect(')');
      return Expr::inv(e);
    }
    if (in_.at_number()) {
      const double v = in_.number();
      if (in_.peek() == 'i' && !std::isalnum(static_cast<unsigned char>(in_.peek(1))) && in_.peek(1) != '_') {
        in_.accept('i');
        return Expr::constant(Complex(0.0, v));
      }
      return Expr::constant(Complex(v, 0.0));
    }
    const std::size_t at = in_.pos();
    const std::string w = in_.word();
    if (!w.empty()) in_.fail_at(at, "unknown identifier '" + w + "'");
    in_.fail("expected an operand" + in_.found());
  }

  detail::TextCursor in_;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

bool compound_scalar(Complex c) {
  if (c.imag() == 0) return std::signbit(c.real()) && c.real() != 0;
  return c.real() != 0 || c.imag() < 0;
}

std::string scalar_atom(Complex c) {
  const std::string s = format_complex(c);
  return compound_scalar(c) ? "(" + s + ")" : s;
}

enum class Ctx { Top, Operand };

std::string print(const Expr& e, Ctx ctx);

std::string paren_if(bool p, const std::string& s) { return p ? "(" + s + ")" : s; }

// Operand of a product, a negation or a scalar factor.
std::string factor(const Expr& e, bool right) {
  const auto k = e.kind();
  const bool p = k == Expr::Kind::Add || (right && (k == Expr::Kind::Mul || k == Expr::Kind::ScalarMul));
  return paren_if(p, print(e, Ctx::Operand));
}

std::string scaled(Complex s, const Expr& f) {
  if (s == Complex(-1.0)) return "-" + factor(f, true);
  if (s.imag() == 0 && s.real() < 0) return "-" + format_double(-s.real()) + "*" + factor(f, true);
  return scalar_atom(s) + "*" + factor(f, true);
}

std::string print(const Expr& e, Ctx ctx) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return "z";
    case Expr::Kind::Const:
      if (e.element()) return format_element(*e.element());
      return ctx == Ctx::Top ? format_complex(e.scalar()) : scalar_atom(e.scalar());
    case Expr::Kind::Add: {
      const Expr& a = e.child(0);
      const Expr& b = e.child(1);
      std::string out = print(a, Ctx::Top) + " ";
      if (b.is_scalar_constant() && b.scalar().imag() == 0 && b.scalar().real() < 0)
        return out + "- " + format_double(-b.scalar().real());
      if (b.kind() == Expr::Kind::ScalarMul && b.scalar().imag() == 0 && b.scalar().real() < 0) {
        const double m = -b.scalar().real();
        if (m == 1) return out + "- " + factor(b.child(), false);
        return out + "- " + format_double(m) + "*" + factor(b.child(), true);
      }
      return out + "+ " + paren_if(b.kind() == Expr::Kind::Add, print(b, Ctx::Operand));
    }
    case Expr::Kind::ScalarMul:
      return scaled(e.scalar(), e.child());
    case Expr::Kind::Mul:
      return factor(e.child(0), false) + "*" + factor(e.child(1), true);
    case Expr::Kind::Inv:
      return "inv(" + print(e.child(), Ctx::Top) + ")";
    case Expr::Kind::IntPow: {
      const Expr& b = e.child();
      const bool atom = b.kind() == Expr::Kind::Var || b.kind() == Expr::Kind::Inv ||
                        (b.kind() == Expr::Kind::Const && b.element());
      return paren_if(!atom, print(b, Ctx::Top)) + "^" + std::to_string(e.exponent());
    }
  }
  return "?";
}

}  // namespace

std::string to_string(const Expr& f) { return print(f, Ctx::Top); }

// ---------------------------------------------------------------------------
// Evaluation, differentiation, composition

ComplexElement eval(const Expr& f, const ComplexElement& z) {
  detail::Tape tape(f);
  const std::size_t slots = tape.slot_count(z);
  std::vector<Complex> out(slots);
  std::vector<Complex> scratch;
  for (std::size_t s = 0; s < slots; ++s) {
    out[s] = tape.run(
        slot_value(z, s, slots), s, [](Complex c) { return c; }, [](Complex c) { return c == Complex(0.0); },
        scratch);
  }
  return from_slots(z.model(), std::move(out));
}

Expr symbolic_derivative(const Expr& f) {
  std::unordered_map<const void*, Expr> memo;
  std::function<Expr(const Expr&)> d = [&](const Expr& e) -> Expr {
    if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
    Expr out;
    switch (e.kind()) {
      case Expr::Kind::Var:
        out = Expr::constant(1.0);
        break;
      case Expr::Kind::Const:
        out = Expr::constant(0.0);
        break;
      case Expr::Kind::Add:
        out = Expr::add(d(e.child(0)), d(e.child(1)));
        break;
      case Expr::Kind::ScalarMul:
        out = Expr::scale(e.scalar(), d(e.child()));
        break;
      case Expr::Kind::Mul:
        out = Expr::add(Expr::mul(d(e.child(0)), e.child(1)), Expr::mul(e.child(0), d(e.child(1))));
        break;
      case Expr::Kind::Inv:
        out = Expr::mul(Expr::neg(Expr::pow(e, 2)), d(e.child()));
        break;
      case Expr::Kind::IntPow: {
        const unsigned n = e.exponent();
        out = Expr::scale(double(n), Expr::mul(Expr::pow(e.child(), n - 1), d(e.child())));
        break;
      }
    }
    memo.emplace(e.identity(), out);
    return out;
  };
  return d(f);
}

Expr compose(const Expr& f, const Expr& g) {
  std::unordered_map<const void*, Expr> memo;
  std::function<Expr(const Expr&)> sub = [&](const Expr& e) -> Expr {
    if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
    Expr out;
    switch (e.kind()) {
      case Expr::Kind::Var:
        out = g;
        break;
      case Expr::Kind::Const:
        out = e;
        break;
      case Expr::Kind::Add:
        out = Expr::add(sub(e.child(0)), sub(e.child(1)));
        break;
      case Expr::Kind::ScalarMul:
        out = Expr::scale(e.scalar(), sub(e.child()));
        break;
      case Expr::Kind::Mul:
        out = Expr::mul(sub(e.child(0)), sub(e.child(1)));
        break;
      case Expr::Kind::Inv:
        out = Expr::inv(sub(e.child()));
        break;
      case Expr::Kind::IntPow:
        out = Expr::pow(sub(e.child()), e.exponent());
        break;
    }
    memo.emplace(e.identity(), out);
    return out;
  };
  return sub(f);
}

}  // namespace ordcx
