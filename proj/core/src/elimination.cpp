#include "eun/elimination.hpp"

#include <algorithm>

#include "eun/error.hpp"

namespace eun {

namespace {

// Table over `scope` (sorted ids), first variable slowest.
struct Factor {
  VarSet scope;
  std::vector<double> values;
};

std::size_t factor_offset(const Factor& f, const StateSpace& space,
                          std::span<const ValueIndex> state) {
  std::size_t offset = 0;
  for (VarId v : f.scope) offset = offset * space.cardinality(v) + state[v];
  return offset;
}

Factor restrict_potential(const RestrictedPotential& pot, const StateSpace& space,
                          const PartialAssignment& evidence, std::vector<ValueIndex>& state) {
  VarSet scope = pot.conditioning();
  scope.insert(pot.variable());
  Factor f{scope - evidence.fixed_vars(), {}};
  f.values.reserve(space.size_of(f.scope));
  evidence.apply_to(state);
  for_each_configuration(space, f.scope, state, [&] { f.values.push_back(pot.value(state)); });
  return f;
}

// Multiplies `factors` and sums out `var`.
Factor eliminate(const std::vector<Factor>& factors, VarId var, const StateSpace& space,
                 std::uint64_t cap, std::vector<ValueIndex>& state) {
  VarSet scope;
  for (const Factor& f : factors) scope = scope | f.scope;
  if (space.size_of(scope) > cap)
    throw CapExceededError("intermediate factor over " + std::to_string(scope.size()) +
                           " variables exceeds the state cap");
  Factor out{scope - VarSet{var}, {}};
  out.values.assign(space.size_of(out.scope), 0.0);
  for_each_configuration(space, scope, state, [&] {
    double product = 1.0;
    for (const Factor& f : factors) product *= f.values[factor_offset(f, space, state)];
    out.values[factor_offset(out, space, state)] += product;
  });
  return out;
}

}  // namespace

double summed_elimination(const Network& network, const PartialAssignment& evidence,
                          std::span<const Layer> layers) {
  const StateSpace& space = network.space();
  if (evidence.num_vars() != network.num_vars())
    throw ArgumentError("partial assignment does not match the network");
  for (VarId v : evidence.fixed_vars())
    if (evidence.value(v) >= space.cardinality(v))
      throw ArgumentError("value outside the domain of '" + network.variable(v).name + "'");

  std::vector<ValueIndex> state(network.num_vars(), 0);
  std::vector<Factor> pool;
  for (Layer layer : layers)
    for (VarId v : network.ordering().order())
      pool.push_back(restrict_potential(network.potential(layer, v), space, evidence, state));

  for (VarId var : network.ordering().order()) {
    if (evidence.is_fixed(var)) continue;
    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (Factor& f : pool) (f.scope.contains(var) ? touching : rest).push_back(std::move(f));
    if (touching.empty()) {
      rest.push_back(Factor{{}, {static_cast<double>(space.cardinality(var))}});
    } else {
      rest.push_back(eliminate(touching, var, space, network.state_cap(), state));
    }
    pool = std::move(rest);
  }

  double result = 1.0;
  for (const Factor& f : pool) result *= f.values.front();
  return result;
}

}  // namespace eun
