#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ordcx/element.hpp"

namespace ordcx {

/// A band of the coordinate model together with its projection.
///
/// Finite model: an index mask. Sequence model: either a finite index set or
/// the complement of one (cofinite), which is exactly what supports of
/// eventually-constant sequences look like.
class Band {
 public:
  static Band full(const Model& model);
  static Band empty(const Model& model);
  static Band from_mask(std::vector<bool> mask);
  static Band finite_set(std::set<std::size_t> indices);
  static Band cofinite_set(std::set<std::size_t> excluded);

  /// The band generated by z: coordinates where z is nonzero.
  template <class T>
  static Band support_of(const Element<T>& z) {
    if (z.is_finite()) {
      std::vector<bool> mask(z.model().dimension());
      for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = !(z[k] == T(0));
      return from_mask(std::move(mask));
    }
    std::set<std::size_t> listed;
    const bool tail_nonzero = !(z.tail() == T(0));
    for (std::size_t k = 0; k < z.stored().size(); ++k) {
      const bool nonzero = !(z.stored()[k] == T(0));
      if (nonzero != tail_nonzero) listed.insert(k);
    }
    return tail_nonzero ? cofinite_set(std::move(listed)) : finite_set(std::move(listed));
  }

  const Model& model() const noexcept { return model_; }
  bool contains(std::size_t k) const;
  bool is_empty() const;
  bool is_full() const;

  Band complement() const;
  Band intersect(const Band& other) const;
  Band unite(const Band& other) const;
  bool disjoint_with(const Band& other) const { return intersect(other).is_empty(); }

  /// Member indices; only defined for the finite model or a finite index set.
  std::vector<std::size_t> indices() const;

  /// `{0,2}` for finite sets, `N\{1}` for cofinite sets.
  std::string to_string() const;

  /// Band projection: zero the complement.
  template <class T>
  Element<T> project(const Element<T>& x) const {
    require_same_model(model_, x.model());
    if (model_.is_finite()) {
      std::vector<T> out(mask_.size());
      for (std::size_t k = 0; k < mask_.size(); ++k) out[k] = mask_[k] ? x[k] : T(0);
      return Element<T>(model_, std::move(out));
    }
    std::size_t span = x.stored().size();
    if (!listed_.empty()) span = std::max(span, *listed_.rbegin() + 1);
    std::vector<T> out(span);
    for (std::size_t k = 0; k < span; ++k) out[k] = contains(k) ? x[k] : T(0);
    return Element<T>(model_, std::move(out), cofinite_ ? x.tail() : T(0));
  }

  template <class T>
  Element<T> indicator() const {
    return project(Element<T>::unit(model_));
  }

  friend bool operator==(const Band&, const Band&) = default;

 private:
  Band(Model model, std::vector<bool> mask, std::set<std::size_t> listed, bool cofinite)
      : model_(model), mask_(std::move(mask)), listed_(std::move(listed)), cofinite_(cofinite) {}

  Model model_;
  std::vector<bool> mask_;
  std::set<std::size_t> listed_;
  bool cofinite_ = false;
};

}  // namespace ordcx
