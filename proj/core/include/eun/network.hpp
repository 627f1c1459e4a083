#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eun/event.hpp"
#include "eun/graph.hpp"
#include "eun/potential.hpp"
#include "eun/state_space.hpp"
#include "eun/types.hpp"

namespace eun {

struct NetworkOptions {
  std::uint64_t state_cap = kDefaultStateCap;
  // Run validate_imap during the build and reject networks that fail it.
  bool strict = false;
  double imap_tolerance = kDefaultTolerance;
};

// One restricted-potential entry keyed by labels:
// ratio(variable = value | given...).
struct RatioEntry {
  std::string value;
  std::vector<std::pair<std::string, std::string>> given;
  double ratio = 1.0;
};

// Label-level description of a network, i.e. what a document parses to.
// A variable without a table in `q` / `w` gets the identity potential.
struct NetworkInput {
  std::vector<VariableSpec> variables;
  // Variable names by increasing index; empty means declaration order.
  std::vector<std::string> ordering;
  std::vector<std::pair<std::string, std::string>> prob_arcs;
  std::vector<std::pair<std::string, std::string>> util_arcs;
  std::map<std::string, std::vector<RatioEntry>> q;
  std::map<std::string, std::vector<RatioEntry>> w;
};

// A strictly positive function over the full state space.
struct JointTable {
  StateSpace space;
  std::vector<ValueIndex> reference;
  std::vector<double> values;

  double at(std::span<const ValueIndex> state) const { return values[space.index_of(state)]; }
};

struct ReconstructedJoint {
  JointTable prob_ratio;            // p(x) / p(x0)
  JointTable util_ratio;            // u(x) / u(x0)
  std::vector<double> probability;  // p(x), sums to 1
  double prob_mass = 0;             // sum_x p(x)/p(x0) = 1/p(x0)
  double utility_of_true = 0;       // u(True) / u(x0) = sum_x p(x) u(x)/u(x0)
};

namespace detail {
struct NetworkCache;
}

// Immutable two-layer network. Copies share the lazily built joint cache,
// and every query is a const read, so one instance may serve many threads.
class Network {
 public:
  std::size_t num_vars() const { return variables_.size(); }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const VariableSpec& variable(VarId v) const { return variables_[v]; }
  VarId id_of(std::string_view name) const;
  ValueIndex value_of(VarId v, std::string_view label) const;
  const std::string& label(VarId v, ValueIndex value) const { return variables_[v].domain[value]; }
  ValueIndex reference(VarId v) const { return reference_[v]; }
  std::span<const ValueIndex> reference_state() const { return reference_; }

  const Ordering& ordering() const { return ordering_; }
  const EunGraph& graph() const { return graph_; }
  const StateSpace& space() const { return space_; }
  const RestrictedPotential& potential(Layer layer, VarId v) const {
    return layer == Layer::probability ? q_[v] : w_[v];
  }
  std::uint64_t state_cap() const { return state_cap_; }

  // Reconstructed joint, computed once on first use (thread-safe).
  const ReconstructedJoint& joint() const;
  // validate_imap at default tolerance, computed once on first use.
  bool passes_imap() const;

  Event certain() const { return Event::certain(space_, state_cap_); }
  Event cylinder(const PartialAssignment& fixed) const {
    return Event::cylinder(space_, fixed, state_cap_);
  }
  Event cylinder(std::initializer_list<std::pair<std::string_view, std::string_view>> terms) const {
    return cylinder(assignment(terms));
  }

  PartialAssignment assignment(
      std::initializer_list<std::pair<std::string_view, std::string_view>> terms) const;
  VarSet var_set(std::initializer_list<std::string_view> names) const;
  VarSet var_set(std::span<const std::string> names) const;

  // Throws ArgumentError when a value lies outside its variable's domain.
  void check_state(std::span<const ValueIndex> state) const;

 private:
  friend Network build_network(std::vector<VariableSpec>, Ordering, EunGraph,
                               std::vector<RestrictedPotential>, std::vector<RestrictedPotential>,
                               const NetworkOptions&);

  Network() = default;

  std::vector<VariableSpec> variables_;
  std::vector<ValueIndex> reference_;
  Ordering ordering_;
  EunGraph graph_;
  StateSpace space_;
  std::vector<RestrictedPotential> q_;
  std::vector<RestrictedPotential> w_;
  std::uint64_t state_cap_ = kDefaultStateCap;
  std::shared_ptr<detail::NetworkCache> cache_;
};

// Builds and validates a network from label-level inputs.
Network build_network(const NetworkInput& input, const NetworkOptions& options = {});

// Builds from typed parts. `q[i]` / `w[i]` must be the potentials of
// variable i, conditioned on its below-index neighbors in that layer.
Network build_network(std::vector<VariableSpec> variables, Ordering ordering, EunGraph graph,
                      std::vector<RestrictedPotential> q, std::vector<RestrictedPotential> w,
                      const NetworkOptions& options = {});

// Reads the restricted potentials of `graph` under `ordering` off full joint
// tables: q(x_i | x_BP(i), x0 elsewhere). The references of `variables` are
// used; the tables' own references are ignored.
Network network_from_tables(std::vector<VariableSpec> variables, Ordering ordering, EunGraph graph,
                            const JointTable& p, const JointTable& u,
                            const NetworkOptions& options = {});

// prod_i pot_i(x_i | x_BP(i), x0_AP(i)) for the layer, accumulated in log
// space in ordering order.
double joint_ratio(const Network& network, Layer layer, std::span<const ValueIndex> state);
inline double joint_ratio(const Network& network, Layer layer, const Assignment& x) {
  return joint_ratio(network, layer, x.values());
}

ReconstructedJoint reconstruct_joint(const Network& network, std::uint64_t cap);
inline ReconstructedJoint reconstruct_joint(const Network& network) {
  return reconstruct_joint(network, network.state_cap());
}

}  // namespace eun
