#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eun/state_space.hpp"

namespace eun {

// A set of joint states. Cylinder events (all states agreeing with a
// partial assignment) are stored symbolically and enumerated lazily; any
// other event is a materialized membership mask over the full state space.
class Event {
 public:
  Event() = default;

  // The tautological event: the full state space.
  static Event certain(const StateSpace& space, std::uint64_t cap = kDefaultStateCap);
  static Event cylinder(const StateSpace& space, PartialAssignment fixed,
                        std::uint64_t cap = kDefaultStateCap);
  static Event from_states(const StateSpace& space, std::span<const std::uint64_t> indices,
                           std::uint64_t cap = kDefaultStateCap);

  const StateSpace& space() const { return space_; }
  bool is_cylinder() const { return kind_ == Kind::cylinder; }
  // Only meaningful for cylinder events.
  const PartialAssignment& fixed() const { return fixed_; }

  bool empty() const;
  std::uint64_t count() const;
  bool contains(std::span<const ValueIndex> state) const;
  bool contains_index(std::uint64_t index) const;

  // Visits member state indices in increasing order.
  template <class Fn>
  void for_each_index(Fn&& fn) const;

  Event complement() const;
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

  // Same member states, regardless of representation.
  bool same_states(const Event& other) const;

 private:
  enum class Kind { cylinder, mask };

  Event(StateSpace space, std::uint64_t cap, Kind kind)
      : space_(std::move(space)), cap_(cap), kind_(kind) {}

  std::vector<bool> materialize() const;
  static Event from_mask(const StateSpace& space, std::uint64_t cap, std::vector<bool> mask);

  StateSpace space_;
  std::uint64_t cap_ = kDefaultStateCap;
  Kind kind_ = Kind::cylinder;
  PartialAssignment fixed_;
  // Cylinder whose fixed values conflicted during an intersection.
  bool conflict_ = false;
  std::vector<bool> mask_;
};

template <class Fn>
void Event::for_each_index(Fn&& fn) const {
  if (kind_ == Kind::mask) {
    for (std::uint64_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) fn(i);
    return;
  }
  if (conflict_) return;
  const VarSet free = fixed_.free_vars();
  std::uint64_t base = 0;
  for (VarId v = 0; v < space_.num_vars(); ++v)
    if (fixed_.is_fixed(v)) base += fixed_.value(v) * space_.stride(v);
  std::vector<ValueIndex> digits(space_.num_vars(), 0);
  std::uint64_t offset = 0;
  while (true) {
    fn(base + offset);
    std::size_t k = free.size();
    for (; k-- > 0;) {
      const VarId v = free[k];
      if (++digits[v] < space_.cardinality(v)) {
        offset += space_.stride(v);
        break;
      }
      offset -= (digits[v] - 1) * space_.stride(v);
      digits[v] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace eun
