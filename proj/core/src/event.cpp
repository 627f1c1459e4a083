#include "eun/event.hpp"

#include "eun/error.hpp"

namespace eun {

Event Event::certain(const StateSpace& space, std::uint64_t cap) {
  return cylinder(space, PartialAssignment(space.num_vars()), cap);
}

Event Event::cylinder(const StateSpace& space, PartialAssignment fixed, std::uint64_t cap) {
  if (fixed.num_vars() != space.num_vars())
    throw ArgumentError("partial assignment does not match the state space");
  for (VarId v = 0; v < space.num_vars(); ++v)
    if (fixed.is_fixed(v) && fixed.value(v) >= space.cardinality(v))
      throw ArgumentError("value outside the domain of variable " + std::to_string(v));
  Event e(space, cap, Kind::cylinder);
  e.fixed_ = std::move(fixed);
  return e;
}

Event Event::from_states(const StateSpace& space, std::span<const std::uint64_t> indices,
                         std::uint64_t cap) {
  space.require_within(cap);
  std::vector<bool> mask(space.size(), false);
  for (std::uint64_t i : indices) {
    if (i >= space.size()) throw ArgumentError("state index outside the state space");
    mask[i] = true;
  }
  return from_mask(space, cap, std::move(mask));
}

Event Event::from_mask(const StateSpace& space, std::uint64_t cap, std::vector<bool> mask) {
  Event e(space, cap, Kind::mask);
  e.mask_ = std::move(mask);
  return e;
}

std::vector<bool> Event::materialize() const {
  if (kind_ == Kind::mask) return mask_;
  space_.require_within(cap_);
  std::vector<bool> mask(space_.size(), false);
  for_each_index([&](std::uint64_t i) { mask[i] = true; });
  return mask;
}

bool Event::empty() const {
  if (kind_ == Kind::cylinder) return conflict_;
  for (bool b : mask_)
    if (b) return false;
  return true;
}

std::uint64_t Event::count() const {
  if (kind_ == Kind::cylinder) {
    if (conflict_) return 0;
    return space_.size_of(fixed_.free_vars());
  }
  std::uint64_t n = 0;
  for (bool b : mask_) n += b ? 1 : 0;
  return n;
}

bool Event::contains(std::span<const ValueIndex> state) const {
  if (kind_ == Kind::cylinder) return !conflict_ && fixed_.matches(state);
  return mask_[space_.index_of(state)];
}

bool Event::contains_index(std::uint64_t index) const {
  if (kind_ == Kind::mask) return mask_[index];
  std::vector<ValueIndex> state(space_.num_vars());
  space_.decode(index, state);
  return contains(state);
}

Event Event::complement() const {
  if (kind_ == Kind::cylinder && conflict_)
    return certain(space_, cap_);
  std::vector<bool> mask = materialize();
  mask.flip();
  return from_mask(space_, cap_, std::move(mask));
}

Event operator&(const Event& a, const Event& b) {
  if (!(a.space_ == b.space_)) throw ArgumentError("events live in different state spaces");
  if (a.is_cylinder() && b.is_cylinder()) {
    Event out = a;
    if (b.conflict_) out.conflict_ = true;
    for (VarId v = 0; v < a.space_.num_vars() && !out.conflict_; ++v) {
      if (!b.fixed_.is_fixed(v)) continue;
      if (!out.fixed_.is_fixed(v))
        out.fixed_.set(v, b.fixed_.value(v));
      else if (out.fixed_.value(v) != b.fixed_.value(v))
        out.conflict_ = true;
    }
    return out;
  }
  std::vector<bool> mask = a.materialize();
  const std::vector<bool> other = b.materialize();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] && other[i];
  return Event::from_mask(a.space_, a.cap_, std::move(mask));
}

Event operator|(const Event& a, const Event& b) {
  if (!(a.space_ == b.space_)) throw ArgumentError("events live in different state spaces");
  std::vector<bool> mask = a.materialize();
  const std::vector<bool> other = b.materialize();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] || other[i];
  return Event::from_mask(a.space_, a.cap_, std::move(mask));
}

bool Event::same_states(const Event& other) const {
  return space_ == other.space_ && materialize() == other.materialize();
}

}  // namespace eun
