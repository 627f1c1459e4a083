#include "eun/types.hpp"

#include <algorithm>
#include <iterator>

namespace eun {

std::string_view layer_name(Layer layer) {
  return layer == Layer::probability ? "probability" : "utility";
}

VarSet::VarSet(std::initializer_list<VarId> ids) : VarSet(std::vector<VarId>(ids)) {}

VarSet::VarSet(std::vector<VarId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VarSet VarSet::all(std::size_t n) {
  VarSet s;
  s.ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool VarSet::contains(VarId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VarSet::insert(VarId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VarSet::erase(VarId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

bool VarSet::disjoint(const VarSet& other) const { return (*this & other).empty(); }

bool VarSet::subset_of(const VarSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

VarSet operator|(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VarSet operator&(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VarSet operator-(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

}  // namespace eun
