#include "eun/potential.hpp"

#include <cmath>

#include "eun/error.hpp"

namespace eun {

RestrictedPotential::RestrictedPotential(VarId variable, Layer layer, VarSet conditioning,
                                         const StateSpace& space, std::vector<double> values)
    : variable_(variable),
      layer_(layer),
      conditioning_(std::move(conditioning)),
      own_card_(space.cardinality(variable)),
      values_(std::move(values)) {
  if (conditioning_.contains(variable_))
    throw ModelError("a potential cannot condition on its own variable");
  std::size_t expected = own_card_;
  for (VarId v : conditioning_) {
    cond_cards_.push_back(space.cardinality(v));
    expected *= space.cardinality(v);
  }
  if (values_.size() != expected)
    throw ModelError("potential table for variable " + std::to_string(variable_) + " has " +
                     std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(expected));
  log_values_.reserve(values_.size());
  for (double x : values_) log_values_.push_back(std::log(x));
}

RestrictedPotential RestrictedPotential::identity(VarId variable, Layer layer, VarSet conditioning,
                                                  const StateSpace& space) {
  const std::size_t size = space.size_of(conditioning) * space.cardinality(variable);
  return RestrictedPotential(variable, layer, std::move(conditioning), space,
                             std::vector<double>(size, 1.0));
}

std::size_t RestrictedPotential::offset(std::span<const ValueIndex> state) const {
  std::size_t configuration = 0;
  for (std::size_t k = 0; k < cond_cards_.size(); ++k)
    configuration = configuration * cond_cards_[k] + state[conditioning_[k]];
  return configuration * own_card_ + state[variable_];
}

void RestrictedPotential::decode_configuration(std::size_t configuration,
                                               std::span<ValueIndex> state) const {
  for (std::size_t k = cond_cards_.size(); k-- > 0;) {
    state[conditioning_[k]] = static_cast<ValueIndex>(configuration % cond_cards_[k]);
    configuration /= cond_cards_[k];
  }
}

bool RestrictedPotential::is_identity() const {
  for (double x : values_)
    if (x != 1.0) return false;
  return true;
}

}  // namespace eun
