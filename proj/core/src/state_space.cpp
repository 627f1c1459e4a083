#include "eun/state_space.hpp"

#include <limits>
#include <string>

#include "eun/error.hpp"

namespace eun {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

StateSpace::StateSpace(std::vector<std::size_t> cardinalities) : cards_(std::move(cardinalities)) {
  strides_.assign(cards_.size(), 0);
  size_ = 1;
  for (std::size_t k = cards_.size(); k-- > 0;) {
    strides_[k] = size_;
    size_ = saturating_mul(size_, cards_[k]);
  }
}

std::uint64_t StateSpace::size_of(const VarSet& vars) const {
  std::uint64_t n = 1;
  for (VarId v : vars) n = saturating_mul(n, cards_[v]);
  return n;
}

std::uint64_t StateSpace::index_of(std::span<const ValueIndex> state) const {
  std::uint64_t index = 0;
  for (std::size_t v = 0; v < cards_.size(); ++v) index += state[v] * strides_[v];
  return index;
}

void StateSpace::decode(std::uint64_t index, std::span<ValueIndex> state) const {
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    state[v] = static_cast<ValueIndex>(index / strides_[v]);
    index %= strides_[v];
  }
}

void StateSpace::require_within(std::uint64_t cap) const {
  if (size_ > cap) {
    throw CapExceededError("state space has " +
                           (size_ == kSaturated ? std::string("more than 2^64")
                                                : std::to_string(size_)) +
                           " joint states, above the cap of " + std::to_string(cap));
  }
}

ValueIndex PartialAssignment::value(VarId v) const {
  if (values_[v] == kFree)
    throw ArgumentError("variable " + std::to_string(v) + " is not fixed");
  return values_[v];
}

VarSet PartialAssignment::fixed_vars() const {
  std::vector<VarId> ids;
  for (VarId v = 0; v < values_.size(); ++v)
    if (values_[v] != kFree) ids.push_back(v);
  return VarSet(std::move(ids));
}

VarSet PartialAssignment::free_vars() const {
  std::vector<VarId> ids;
  for (VarId v = 0; v < values_.size(); ++v)
    if (values_[v] == kFree) ids.push_back(v);
  return VarSet(std::move(ids));
}

bool PartialAssignment::none_fixed() const {
  for (ValueIndex x : values_)
    if (x != kFree) return false;
  return true;
}

bool PartialAssignment::matches(std::span<const ValueIndex> state) const {
  for (VarId v = 0; v < values_.size(); ++v)
    if (values_[v] != kFree && values_[v] != state[v]) return false;
  return true;
}

void PartialAssignment::apply_to(std::span<ValueIndex> state) const {
  for (VarId v = 0; v < values_.size(); ++v)
    if (values_[v] != kFree) state[v] = values_[v];
}

}  // namespace eun
