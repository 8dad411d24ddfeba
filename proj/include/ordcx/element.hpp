#pragma once

// Coordinatewise elements of the two concrete models: C^n / R^n (Finite) and
// eventually-constant sequences (a finite prefix followed by a constant tail).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ordcx/errors.hpp"

namespace ordcx {

using Complex = std::complex<double>;
using Rational = boost::rational<long long>;

class Model {
 public:
  enum class Kind { Finite, EventuallyConstant };

  static Model finite(std::size_t dimension) {
    if (dimension == 0) throw std::invalid_argument("finite model needs a positive dimension");
    return Model(Kind::Finite, dimension);
  }
  static Model sequence() { return Model(Kind::EventuallyConstant, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Number of coordinates; 0 for the sequence model.
  std::size_t dimension() const noexcept { return dimension_; }

  std::string name() const {
    return is_finite() ? "Finite(" + std::to_string(dimension_) + ")" : "EventuallyConstant";
  }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Model(Kind kind, std::size_t dimension) : kind_(kind), dimension_(dimension) {}

  Kind kind_;
  std::size_t dimension_;
};

inline void require_same_model(const Model& a, const Model& b) {
  if (!(a == b)) throw ModelMismatch("model mismatch: " + a.name() + " vs " + b.name());
}

namespace detail {
template <class T>
struct real_of {
  using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
  using type = T;
};
}  // namespace detail

/// Ordered scalar underlying a coordinate type (double for Complex).
template <class T>
using real_t = typename detail::real_of<T>::type;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return boost::rational_cast<double>(v); }

inline double coord_abs(double v) { return std::fabs(v); }
inline double coord_abs(const Complex& v) { return std::hypot(v.real(), v.imag()); }
inline Rational coord_abs(const Rational& v) { return boost::abs(v); }

template <class T>
class Element {
 public:
  using value_type = T;

  /// Finite model: `coords` must hold exactly dimension() values and `tail` is ignored.
  /// Sequence model: `coords` is the prefix; the representation is canonicalized.
  Element(Model model, std::vector<T> coords, T tail = T{})
      : model_(model), coords_(std::move(coords)), tail_(tail) {
    if (model_.is_finite()) {
      if (coords_.size() != model_.dimension())
        throw std::invalid_argument("finite element needs " + std::to_string(model_.dimension()) +
                                    " coordinates, got " + std::to_string(coords_.size()));
      tail_ = T{};
    } else {
      canonicalize();
    }
  }

  static Element finite(std::vector<T> coords) {
    auto model = Model::finite(coords.size());
    return Element(model, std::move(coords));
  }
  static Element sequence(std::vector<T> prefix, T tail) {
    return Element(Model::sequence(), std::move(prefix), tail);
  }
  static Element constant(const Model& model, T value) {
    if (model.is_finite()) return Element(model, std::vector<T>(model.dimension(), value));
    return Element(model, {}, value);
  }
  static Element zero(const Model& model) { return constant(model, T(0)); }
  static Element unit(const Model& model) { return constant(model, T(1)); }

  const Model& model() const noexcept { return model_; }
  bool is_finite() const noexcept { return model_.is_finite(); }

  /// All coordinates (finite model) or the prefix (sequence model).
  const std::vector<T>& stored() const noexcept { return coords_; }

  const T& tail() const {
    if (model_.is_finite()) throw std::logic_error("finite element has no tail");
    return tail_;
  }

  T operator[](std::size_t k) const {
    if (k < coords_.size()) return coords_[k];
    if (model_.is_finite()) throw std::out_of_range("coordinate " + std::to_string(k) + " out of range");
    return tail_;
  }

  /// Distinct coordinate slots: every finite coordinate, or prefix entries plus one slot for the tail.
  std::size_t slot_count() const noexcept { return coords_.size() + (model_.is_finite() ? 0 : 1); }

  template <class F>
  auto map(F&& f) const -> Element<std::decay_t<decltype(f(std::declval<T>()))>> {
    using U = std::decay_t<decltype(f(std::declval<T>()))>;
    std::vector<U> out;
    out.reserve(coords_.size());
    for (const auto& v : coords_) out.push_back(f(v));
    if (model_.is_finite()) return Element<U>(model_, std::move(out));
    return Element<U>(model_, std::move(out), f(tail_));
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.model_ == b.model_ && a.coords_ == b.coords_ && a.tail_ == b.tail_;
  }

 private:
  void canonicalize() {
    while (!coords_.empty() && coords_.back() == tail_) coords_.pop_back();
  }

  Model model_;
  std::vector<T> coords_;
  T tail_;
};

/// Builds an element from per-slot values (see Element::slot_count()).
template <class T>
Element<T> from_slots(const Model& model, std::vector<T> slots) {
  if (model.is_finite()) return Element<T>(model, std::move(slots));
  T tail = slots.back();
  slots.pop_back();
  return Element<T>(model, std::move(slots), tail);
}

/// Number of slots needed to represent both operands.
template <class T, class U>
std::size_t joint_slots(const Element<T>& a, const Element<U>& b) {
  require_same_model(a.model(), b.model());
  if (a.is_finite()) return a.model().dimension();
  return std::max(a.stored().size(), b.stored().size()) + 1;
}

/// Value at slot `s` when `slots` slots are in use (the last slot of a sequence is the tail).
template <class T>
T slot_value(const Element<T>& a, std::size_t s, std::size_t slots) {
  if (!a.is_finite() && s + 1 == slots) return a.tail();
  return a[s];
}

template <class T, class U, class F>
auto zip_with(const Element<T>& a, const Element<U>& b, F&& f)
    -> Element<std::decay_t<decltype(f(std::declval<T>(), std::declval<U>()))>> {
  using V = std::decay_t<decltype(f(std::declval<T>(), std::declval<U>()))>;
  const std::size_t n = joint_slots(a, b);
  std::vector<V> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) out.push_back(f(slot_value(a, s, n), slot_value(b, s, n)));
  return from_slots(a.model(), std::move(out));
}

template <class T>
Element<T> operator+(const Element<T>& a, const Element<T>& b) {
  return zip_with(a, b, [](const T& x, const T& y) { return x + y; });
}
template <class T>
Element<T> operator-(const Element<T>& a, const Element<T>& b) {
  return zip_with(a, b, [](const T& x, const T& y) { return x - y; });
}
template <class T>
Element<T> operator*(const Element<T>& a, const Element<T>& b) {
  return zip_with(a, b, [](const T& x, const T& y) { return x * y; });
}
template <class T>
Element<T> operator-(const Element<T>& a) {
  return a.map([](const T& x) { return -x; });
}
template <class T>
Element<T> operator*(const T& s, const Element<T>& a) {
  return a.map([&](const T& x) { return s * x; });
}

template <class T>
Element<T> unit_like(const Element<T>& a) {
  return Element<T>::unit(a.model());
}

/// Coordinatewise modulus; lands in the real part of the model.
template <class T>
Element<real_t<T>> modulus_of(const Element<T>& z) {
  return z.map([](const T& v) { return real_t<T>(coord_abs(v)); });
}

template <class T>
Element<T> sup(const Element<T>& a, const Element<T>& b) {
  return zip_with(a, b, [](const T& x, const T& y) { return x < y ? y : x; });
}
template <class T>
Element<T> inf(const Element<T>& a, const Element<T>& b) {
  return zip_with(a, b, [](const T& x, const T& y) { return y < x ? y : x; });
}
template <class T>
Element<T> positive_part(const Element<T>& a) {
  return a.map([](const T& x) { return x < T(0) ? T(0) : x; });
}
template <class T>
Element<T> negative_part(const Element<T>& a) {
  return a.map([](const T& x) { return x < T(0) ? T(-x) : T(0); });
}

/// First coordinate index where a <= b fails, if any.
template <class T>
std::optional<std::size_t> first_violation_of_le(const Element<T>& a, const Element<T>& b) {
  const std::size_t n = joint_slots(a, b);
  for (std::size_t s = 0; s < n; ++s)
    if (slot_value(b, s, n) < slot_value(a, s, n)) return s;
  return std::nullopt;
}

template <class T>
bool leq(const Element<T>& a, const Element<T>& b) {
  return !first_violation_of_le(a, b).has_value();
}

template <class T>
bool is_positive(const Element<T>& a) {
  return leq(Element<T>::zero(a.model()), a);
}

template <class T>
bool is_zero(const Element<T>& a) {
  return a == Element<T>::zero(a.model());
}

/// Elements are equal up to an absolute-plus-relative tolerance on every coordinate.
template <class T>
bool approx_equal(const Element<T>& a, const Element<T>& b, double rel = 1e-9, double abs_floor = 0.0) {
  const std::size_t n = joint_slots(a, b);
  for (std::size_t s = 0; s < n; ++s) {
    const auto x = slot_value(a, s, n);
    const auto y = slot_value(b, s, n);
    const double scale = std::max({1.0, to_double(coord_abs(x)), to_double(coord_abs(y))});
    if (to_double(coord_abs(x - y)) > rel * scale + abs_floor) return false;
  }
  return true;
}

using RealElement = Element<double>;
using ComplexElement = Element<Complex>;
using ExactElement = Element<Rational>;

inline RealElement real_part(const ComplexElement& z) {
  return z.map([](const Complex& v) { return v.real(); });
}
inline RealElement imag_part(const ComplexElement& z) {
  return z.map([](const Complex& v) { return v.imag(); });
}
inline ComplexElement complexify(const RealElement& x) {
  return x.map([](double v) { return Complex(v, 0.0); });
}
inline ComplexElement complexify(const RealElement& x, const RealElement& y) {
  return zip_with(x, y, [](double a, double b) { return Complex(a, b); });
}
inline RealElement to_real(const ExactElement& x) {
  return x.map([](const Rational& v) { return to_double(v); });
}

}  // namespace ordcx
