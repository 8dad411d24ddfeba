#include "ordcx/band.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace ordcx {

Band Band::full(const Model& model) {
  if (model.is_finite()) return from_mask(std::vector<bool>(model.dimension(), true));
  return cofinite_set({});
}

Band Band::empty(const Model& model) {
  if (model.is_finite()) return from_mask(std::vector<bool>(model.dimension(), false));
  return finite_set({});
}

Band Band::from_mask(std::vector<bool> mask) {
  auto model = Model::finite(mask.size());
  return Band(model, std::move(mask), {}, false);
}

Band Band::finite_set(std::set<std::size_t> indices) {
  return Band(Model::sequence(), {}, std::move(indices), false);
}

Band Band::cofinite_set(std::set<std::size_t> excluded) {
  return Band(Model::sequence(), {}, std::move(excluded), true);
}

bool Band::contains(std::size_t k) const {
  if (model_.is_finite()) return k < mask_.size() && mask_[k];
  return cofinite_ != (listed_.count(k) > 0);
}

bool Band::is_empty() const {
  if (model_.is_finite()) return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
  return !cofinite_ && listed_.empty();
}

bool Band::is_full() const {
  if (model_.is_finite()) return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
  return cofinite_ && listed_.empty();
}

Band Band::complement() const {
  if (model_.is_finite()) {
    std::vector<bool> mask(mask_.size());
    for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = !mask_[k];
    return from_mask(std::move(mask));
  }
  return Band(model_, {}, listed_, !cofinite_);
}

Band Band::intersect(const Band& other) const {
  require_same_model(model_, other.model_);
  if (model_.is_finite()) {
    std::vector<bool> mask(mask_.size());
    for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = mask_[k] && other.mask_[k];
    return from_mask(std::move(mask));
  }
  std::set<std::size_t> out;
  if (!cofinite_ && !other.cofinite_) {
    std::set_intersection(listed_.begin(), listed_.end(), other.listed_.begin(), other.listed_.end(),
                          std::inserter(out, out.end()));
    return finite_set(std::move(out));
  }
  if (cofinite_ && other.cofinite_) {
    std::set_union(listed_.begin(), listed_.end(), other.listed_.begin(), other.listed_.end(),
                   std::inserter(out, out.end()));
    return cofinite_set(std::move(out));
  }
  const auto& finite = cofinite_ ? other.listed_ : listed_;
  const auto& excluded = cofinite_ ? listed_ : other.listed_;
  std::set_difference(finite.begin(), finite.end(), excluded.begin(), excluded.end(), std::inserter(out, out.end()));
  return finite_set(std::move(out));
}

Band Band::unite(const Band& other) const {
  return complement().intersect(other.complement()).complement();
}

std::vector<std::size_t> Band::indices() const {
  std::vector<std::size_t> out;
  if (model_.is_finite()) {
    for (std::size_t k = 0; k < mask_.size(); ++k)
      if (mask_[k]) out.push_back(k);
    return out;
  }
  if (cofinite_) throw std::logic_error("cofinite band has infinitely many indices");
  return {listed_.begin(), listed_.end()};
}

std::string Band::to_string() const {
  std::ostringstream os;
  auto list = [&](const auto& range) {
    os << '{';
    bool first = true;
    for (auto k : range) {
      if (!first) os << ',';
      os << k;
      first = false;
    }
    os << '}';
  };
  if (!model_.is_finite() && cofinite_) {
    os << "N\\";
    list(listed_);
  } else {
    list(indices());
  }
  return os.str();
}

}  // namespace ordcx
