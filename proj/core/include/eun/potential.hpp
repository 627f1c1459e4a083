#pragma once

#include <span>
#include <vector>

#include "eun/state_space.hpp"
#include "eun/types.hpp"

namespace eun {

// Positive ratio table for one variable in one layer, conditioned on a set
// of other variables. For a stored network the conditioning set is the
// variable's below-index neighbors (above-index neighbors sit at their
// reference values); the same type also holds derived full-mantle tables.
//
// Layout: conditioning configurations in mixed radix (first conditioning
// variable slowest), the variable's own value fastest.
class RestrictedPotential {
 public:
  RestrictedPotential() = default;
  RestrictedPotential(VarId variable, Layer layer, VarSet conditioning, const StateSpace& space,
                      std::vector<double> values);

  static RestrictedPotential identity(VarId variable, Layer layer, VarSet conditioning,
                                      const StateSpace& space);

  VarId variable() const { return variable_; }
  Layer layer() const { return layer_; }
  const VarSet& conditioning() const { return conditioning_; }
  std::size_t own_cardinality() const { return own_card_; }
  std::size_t num_configurations() const { return values_.size() / own_card_; }
  std::span<const double> values() const { return values_; }

  // Entry selected by the variable's and conditioning variables' positions in `state`.
  std::size_t offset(std::span<const ValueIndex> state) const;
  double value(std::span<const ValueIndex> state) const { return values_[offset(state)]; }
  double log_value(std::span<const ValueIndex> state) const { return log_values_[offset(state)]; }

  double entry(std::size_t configuration, ValueIndex own) const {
    return values_[configuration * own_card_ + own];
  }
  // Writes the conditioning values of `configuration` into `state`.
  void decode_configuration(std::size_t configuration, std::span<ValueIndex> state) const;

  bool is_identity() const;

  friend bool operator==(const RestrictedPotential& a, const RestrictedPotential& b) {
    return a.variable_ == b.variable_ && a.layer_ == b.layer_ &&
           a.conditioning_ == b.conditioning_ && a.values_ == b.values_;
  }

 private:
  VarId variable_ = 0;
  Layer layer_ = Layer::probability;
  VarSet conditioning_;
  std::vector<std::size_t> cond_cards_;
  std::size_t own_card_ = 1;
  std::vector<double> values_;
  std::vector<double> log_values_;
};

}  // namespace eun
