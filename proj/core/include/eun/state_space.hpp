#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eun/types.hpp"

namespace eun {

// Mixed-radix indexing of joint states. Variable 0 is the most significant
// digit, so increasing index order is lexicographic order by variable id.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<std::size_t> cardinalities);

  std::size_t num_vars() const { return cards_.size(); }
  std::size_t cardinality(VarId v) const { return cards_[v]; }
  const std::vector<std::size_t>& cardinalities() const { return cards_; }

  // Number of joint states, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  std::uint64_t stride(VarId v) const { return strides_[v]; }

  // Product of the cardinalities of `vars`, saturating.
  std::uint64_t size_of(const VarSet& vars) const;

  std::uint64_t index_of(std::span<const ValueIndex> state) const;
  void decode(std::uint64_t index, std::span<ValueIndex> state) const;

  // Throws CapExceededError when the full space has more than `cap` states.
  void require_within(std::uint64_t cap) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.cards_ == b.cards_;
  }

 private:
  std::vector<std::size_t> cards_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

// Advances the positions `vars` of `state` to the next joint configuration,
// last variable fastest. Returns false (with those positions reset to 0)
// after the final configuration.
inline bool next_configuration(const StateSpace& space, const VarSet& vars,
                               std::span<ValueIndex> state) {
  for (std::size_t k = vars.size(); k-- > 0;) {
    const VarId v = vars[k];
    if (++state[v] < space.cardinality(v)) return true;
    state[v] = 0;
  }
  return false;
}

// Calls `fn()` once per joint configuration of `vars`, writing each one into
// `state`. Other positions of `state` are left untouched.
template <class Fn>
void for_each_configuration(const StateSpace& space, const VarSet& vars,
                            std::span<ValueIndex> state, Fn&& fn) {
  for (VarId v : vars) state[v] = 0;
  do {
    fn();
  } while (next_configuration(space, vars, state));
}

// One value per variable: a full joint realization.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<ValueIndex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  ValueIndex operator[](VarId v) const { return values_[v]; }
  ValueIndex& operator[](VarId v) { return values_[v]; }
  std::span<const ValueIndex> values() const { return values_; }
  std::span<ValueIndex> values() { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<ValueIndex> values_;
};

// Values for a subset of the variables; the rest are free.
class PartialAssignment {
 public:
  static constexpr ValueIndex kFree = ~ValueIndex{0};

  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t num_vars) : values_(num_vars, kFree) {}

  std::size_t num_vars() const { return values_.size(); }
  bool is_fixed(VarId v) const { return values_[v] != kFree; }
  ValueIndex value(VarId v) const;
  void set(VarId v, ValueIndex value) { values_[v] = value; }
  void clear(VarId v) { values_[v] = kFree; }

  VarSet fixed_vars() const;
  VarSet free_vars() const;
  bool none_fixed() const;

  bool matches(std::span<const ValueIndex> state) const;

  // Writes the fixed values into `state`, leaving the free positions alone.
  void apply_to(std::span<ValueIndex> state) const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<ValueIndex> values_;
};

}  // namespace eun
