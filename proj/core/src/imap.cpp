#include "eun/imap.hpp"

#include <algorithm>

#include "eun/error.hpp"
#include "summation.hpp"

namespace eun {

namespace {

const JointTable& layer_table(const ReconstructedJoint& joint, Layer layer) {
  return layer == Layer::probability ? joint.prob_ratio : joint.util_ratio;
}

// Offset of (own value, mantle configuration) in a table laid out like
// RestrictedPotential: mantle in mixed radix, own value fastest.
std::size_t mantle_offset(const StateSpace& space, VarId v, const VarSet& mantle,
                          std::span<const ValueIndex> state) {
  std::size_t configuration = 0;
  for (VarId m : mantle) configuration = configuration * space.cardinality(m) + state[m];
  return configuration * space.cardinality(v) + state[v];
}

}  // namespace

bool ImapReport::mentions(VarId variable) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const ImapViolation& v) { return v.variable == variable; });
}

MantleTable full_mantle_potential(const Network& network, Layer layer, VarId variable, bool strict,
                                  double tolerance) {
  const ReconstructedJoint& joint = network.joint();
  const JointTable& table = layer_table(joint, layer);
  const StateSpace& space = network.space();
  const VarSet& mantle = network.graph().neighbors(layer, variable);
  const ValueIndex ref = network.reference(variable);
  const std::uint64_t stride = space.stride(variable);

  std::vector<ValueIndex> state(network.reference_state().begin(),
                                network.reference_state().end());
  std::vector<double> values(space.size_of(mantle) * space.cardinality(variable));
  VarSet scope = mantle;
  scope.insert(variable);
  for_each_configuration(space, scope, state, [&] {
    const std::uint64_t index = space.index_of(state);
    const std::uint64_t base = detail::replace_digit(index, stride, state[variable], ref);
    values[mantle_offset(space, variable, mantle, state)] =
        state[variable] == ref ? 1.0 : table.values[index] / table.values[base];
  });

  double spread = 0;
  std::fill(state.begin(), state.end(), 0);
  std::uint64_t index = 0;
  const VarSet all = VarSet::all(network.num_vars());
  do {
    if (state[variable] != ref) {
      const double ratio =
          table.values[index] /
          table.values[detail::replace_digit(index, stride, state[variable], ref)];
      spread = std::max(spread, detail::relative_difference(
                                    ratio, values[mantle_offset(space, variable, mantle, state)]));
    }
    ++index;
  } while (next_configuration(space, all, state));

  if (strict && spread > tolerance)
    throw ModelError(std::string(layer_name(layer)) + " ratio of '" +
                     network.variable(variable).name +
                     "' depends on variables outside its mantle");
  return {RestrictedPotential(variable, layer, mantle, space, std::move(values)), spread};
}

ImapReport validate_imap(const Network& network, double tolerance) {
  const ReconstructedJoint& joint = network.joint();
  const StateSpace& space = network.space();
  const std::size_t n = network.num_vars();
  const VarSet all = VarSet::all(n);
  ImapReport report;

  for (Layer layer : kBothLayers) {
    const JointTable& table = layer_table(joint, layer);
    for (VarId v = 0; v < n; ++v) {
      const VarSet& mantle = network.graph().neighbors(layer, v);
      VarSet outside = all - mantle;
      outside.erase(v);
      if (outside.empty()) continue;
      const ValueIndex ref = network.reference(v);
      const std::uint64_t stride = space.stride(v);

      struct Worst {
        double deviation = -1;
        std::vector<ValueIndex> witness;
      };
      std::vector<Worst> worst(space.size_of(mantle) * space.cardinality(v));

      std::vector<ValueIndex> state(n, 0);
      std::uint64_t index = 0;
      do {
        if (state[v] != ref) {
          std::uint64_t completion = index;
          for (VarId o : outside)
            completion = detail::replace_digit(completion, space.stride(o), state[o],
                                               network.reference(o));
          const double ratio =
              table.values[index] / table.values[detail::replace_digit(index, stride, state[v], ref)];
          const double anchored =
              table.values[completion] /
              table.values[detail::replace_digit(completion, stride, state[v], ref)];
          const double deviation = detail::relative_difference(ratio, anchored);
          Worst& slot = worst[mantle_offset(space, v, mantle, state)];
          if (deviation > slot.deviation) {
            slot.deviation = deviation;
            slot.witness = state;
          }
        }
        ++index;
      } while (next_configuration(space, all, state));

      for (Worst& slot : worst)
        if (slot.deviation > tolerance)
          report.violations.push_back({v, layer, Assignment(std::move(slot.witness)), slot.deviation});
    }
  }
  return report;
}

}  // namespace eun
