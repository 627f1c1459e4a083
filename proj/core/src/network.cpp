#include "eun/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "eun/error.hpp"
#include "eun/imap.hpp"
#include "summation.hpp"

namespace eun {

namespace detail {
struct NetworkCache {
  std::once_flag joint_once;
  std::unique_ptr<ReconstructedJoint> joint;
  std::once_flag imap_once;
  bool imap_ok = false;
};
}  // namespace detail

namespace {

std::string table_name(Layer layer, const std::string& variable) {
  return std::string(layer == Layer::probability ? "q" : "w") + "[" + variable + "]";
}

void check_variables(std::vector<VariableSpec>& variables, std::vector<ValueIndex>& reference) {
  std::set<std::string> names;
  reference.clear();
  for (VariableSpec& spec : variables) {
    if (spec.name.empty()) throw ModelError("variable with an empty name");
    if (!names.insert(spec.name).second) throw ModelError("duplicate variable '" + spec.name + "'");
    if (spec.domain.size() < 2)
      throw ModelError("variable '" + spec.name + "' needs at least two domain values");
    std::set<std::string> labels(spec.domain.begin(), spec.domain.end());
    if (labels.size() != spec.domain.size())
      throw ModelError("duplicate domain label in variable '" + spec.name + "'");
    if (spec.reference.empty()) spec.reference = spec.domain.front();
    auto it = std::find(spec.domain.begin(), spec.domain.end(), spec.reference);
    if (it == spec.domain.end())
      throw ModelError("reference value '" + spec.reference + "' is not in the domain of '" +
                       spec.name + "'");
    reference.push_back(static_cast<ValueIndex>(it - spec.domain.begin()));
  }
}

void check_potential(const RestrictedPotential& pot, const std::string& name,
                     std::span<const ValueIndex> reference) {
  const ValueIndex ref = reference[pot.variable()];
  for (std::size_t c = 0; c < pot.num_configurations(); ++c) {
    for (ValueIndex x = 0; x < pot.own_cardinality(); ++x) {
      const double value = pot.entry(c, x);
      if (!(value > 0) || !std::isfinite(value))
        throw ModelError(table_name(pot.layer(), name) + ": non-positive potential entry");
      if (x == ref && value != 1.0)
        throw ModelError(table_name(pot.layer(), name) + ": non-unit reference row");
    }
  }
}

}  // namespace

// --- Network accessors -------------------------------------------------------

VarId Network::id_of(std::string_view name) const {
  for (VarId v = 0; v < variables_.size(); ++v)
    if (variables_[v].name == name) return v;
  throw ArgumentError("unknown variable '" + std::string(name) + "'");
}

ValueIndex Network::value_of(VarId v, std::string_view label) const {
  const auto& domain = variables_[v].domain;
  for (ValueIndex x = 0; x < domain.size(); ++x)
    if (domain[x] == label) return x;
  throw ArgumentError("value '" + std::string(label) + "' is not in the domain of '" +
                      variables_[v].name + "'");
}

const ReconstructedJoint& Network::joint() const {
  std::call_once(cache_->joint_once, [this] {
    cache_->joint = std::make_unique<ReconstructedJoint>(reconstruct_joint(*this));
  });
  return *cache_->joint;
}

bool Network::passes_imap() const {
  std::call_once(cache_->imap_once, [this] { cache_->imap_ok = validate_imap(*this).ok(); });
  return cache_->imap_ok;
}

PartialAssignment Network::assignment(
    std::initializer_list<std::pair<std::string_view, std::string_view>> terms) const {
  PartialAssignment out(num_vars());
  for (const auto& [name, label] : terms) {
    const VarId v = id_of(name);
    out.set(v, value_of(v, label));
  }
  return out;
}

VarSet Network::var_set(std::initializer_list<std::string_view> names) const {
  VarSet out;
  for (std::string_view name : names) out.insert(id_of(name));
  return out;
}

VarSet Network::var_set(std::span<const std::string> names) const {
  VarSet out;
  for (const std::string& name : names) out.insert(id_of(name));
  return out;
}

void Network::check_state(std::span<const ValueIndex> state) const {
  if (state.size() != num_vars())
    throw ArgumentError("assignment has " + std::to_string(state.size()) + " values, expected " +
                        std::to_string(num_vars()));
  for (VarId v = 0; v < num_vars(); ++v)
    if (state[v] >= space_.cardinality(v))
      throw ArgumentError("value outside the domain of '" + variables_[v].name + "'");
}

// --- Building ----------------------------------------------------------------

Network build_network(std::vector<VariableSpec> variables, Ordering ordering, EunGraph graph,
                      std::vector<RestrictedPotential> q, std::vector<RestrictedPotential> w,
                      const NetworkOptions& options) {
  Network net;
  check_variables(variables, net.reference_);
  const std::size_t n = variables.size();
  if (ordering.size() != n) throw ModelError("ordering does not cover every variable");
  if (graph.num_vars() != n) throw ModelError("graph size does not match the variables");
  if (q.size() != n || w.size() != n)
    throw ModelError("expected exactly one potential per variable per layer");

  std::vector<std::size_t> cards;
  for (const VariableSpec& spec : variables) cards.push_back(spec.domain.size());
  net.space_ = StateSpace(std::move(cards));

  for (Layer layer : kBothLayers) {
    auto& pots = layer == Layer::probability ? q : w;
    for (VarId v = 0; v < n; ++v) {
      const RestrictedPotential& pot = pots[v];
      const std::string name = table_name(layer, variables[v].name);
      if (pot.variable() != v || pot.layer() != layer)
        throw ModelError(name + ": potential stored for the wrong variable or layer");
      if (pot.conditioning() != graph.below(layer, v, ordering))
        throw ModelError(name + ": conditioning set does not match the below-index neighbors");
      if (pot.own_cardinality() != net.space_.cardinality(v))
        throw ModelError(name + ": table does not match the domain size");
      check_potential(pot, variables[v].name, net.reference_);
    }
  }

  net.variables_ = std::move(variables);
  net.ordering_ = std::move(ordering);
  net.graph_ = std::move(graph);
  net.q_ = std::move(q);
  net.w_ = std::move(w);
  net.state_cap_ = options.state_cap;
  net.cache_ = std::make_shared<detail::NetworkCache>();

  if (options.strict) {
    const ImapReport report = validate_imap(net, options.imap_tolerance);
    if (!report.ok()) {
      std::ostringstream msg;
      const ImapViolation& first = report.violations.front();
      msg << "joint is not Markov with respect to the declared graph: "
          << layer_name(first.layer) << " ratio of '" << net.variables_[first.variable].name
          << "' depends on a non-neighbor (" << report.violations.size() << " violation(s))";
      throw ModelError(msg.str());
    }
  }
  return net;
}

Network build_network(const NetworkInput& input, const NetworkOptions& options) {
  std::vector<VariableSpec> variables = input.variables;
  std::vector<ValueIndex> reference;
  check_variables(variables, reference);
  const std::size_t n = variables.size();

  std::unordered_map<std::string, VarId> ids;
  for (VarId v = 0; v < n; ++v) ids.emplace(variables[v].name, v);
  auto lookup = [&](const std::string& name, const std::string& where) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ModelError(where + ": unknown variable '" + name + "'");
    return it->second;
  };

  Ordering ordering = Ordering::identity(n);
  if (!input.ordering.empty()) {
    if (input.ordering.size() != n) throw ModelError("ordering does not list every variable");
    std::vector<VarId> order;
    for (const std::string& name : input.ordering) order.push_back(lookup(name, "ordering"));
    ordering = Ordering(std::move(order));
  }

  EunGraph graph(n);
  for (Layer layer : kBothLayers) {
    const auto& arcs = layer == Layer::probability ? input.prob_arcs : input.util_arcs;
    const std::string where = std::string(layer_name(layer)) + " arc";
    for (const auto& [a, b] : arcs) graph.add_arc(layer, lookup(a, where), lookup(b, where));
  }

  std::vector<std::size_t> cards;
  for (const VariableSpec& spec : variables) cards.push_back(spec.domain.size());
  const StateSpace space(cards);

  std::vector<RestrictedPotential> pots[2];
  for (Layer layer : kBothLayers) {
    const auto& tables = layer == Layer::probability ? input.q : input.w;
    for (const auto& [name, entries] : tables) lookup(name, table_name(layer, name));
    auto& out = pots[layer == Layer::probability ? 0 : 1];
    for (VarId v = 0; v < n; ++v) {
      const VarSet below = graph.below(layer, v, ordering);
      const std::string name = table_name(layer, variables[v].name);
      auto it = tables.find(variables[v].name);
      if (it == tables.end()) {
        out.push_back(RestrictedPotential::identity(v, layer, below, space));
        continue;
      }
      const std::size_t own = space.cardinality(v);
      std::vector<double> values(space.size_of(below) * own,
                                 std::numeric_limits<double>::quiet_NaN());
      for (std::size_t c = 0; c < values.size() / own; ++c) values[c * own + reference[v]] = 1.0;

      std::vector<ValueIndex> state(n, 0);
      std::vector<char> filled(values.size(), 0);
      for (const RatioEntry& entry : it->second) {
        std::vector<char> seen(n, 0);
        for (const auto& [given_name, given_label] : entry.given) {
          const VarId g = lookup(given_name, name);
          if (!below.contains(g))
            throw ModelError(name + ": '" + given_name + "' is not a below-index " +
                             std::string(layer_name(layer)) + " neighbor of '" +
                             variables[v].name + "'");
          if (seen[g]) throw ModelError(name + ": '" + given_name + "' given twice");
          seen[g] = 1;
          auto label = std::find(variables[g].domain.begin(), variables[g].domain.end(),
                                 given_label);
          if (label == variables[g].domain.end())
            throw ModelError(name + ": '" + given_label + "' is not a value of '" + given_name +
                             "'");
          state[g] = static_cast<ValueIndex>(label - variables[g].domain.begin());
        }
        for (VarId g : below)
          if (!seen[g])
            throw ModelError(name + ": entry does not give a value for '" + variables[g].name +
                             "'");
        auto label = std::find(variables[v].domain.begin(), variables[v].domain.end(), entry.value);
        if (label == variables[v].domain.end())
          throw ModelError(name + ": '" + entry.value + "' is not a value of '" +
                           variables[v].name + "'");
        const auto x = static_cast<ValueIndex>(label - variables[v].domain.begin());
        std::size_t configuration = 0;
        for (VarId g : below) configuration = configuration * space.cardinality(g) + state[g];
        const std::size_t offset = configuration * own + x;
        if (filled[offset]) throw ModelError(name + ": duplicate entry");
        filled[offset] = 1;
        if (!(entry.ratio > 0) || !std::isfinite(entry.ratio))
          throw ModelError(name + ": non-positive potential entry");
        if (x == reference[v] && entry.ratio != 1.0)
          throw ModelError(name + ": non-unit reference row");
        values[offset] = entry.ratio;
      }
      for (double value : values)
        if (std::isnan(value)) throw ModelError(name + ": potential table incomplete");
      out.emplace_back(v, layer, below, space, std::move(values));
    }
  }

  return build_network(std::move(variables), std::move(ordering), std::move(graph),
                       std::move(pots[0]), std::move(pots[1]), options);
}

Network network_from_tables(std::vector<VariableSpec> variables, Ordering ordering, EunGraph graph,
                            const JointTable& p, const JointTable& u,
                            const NetworkOptions& options) {
  std::vector<ValueIndex> reference;
  check_variables(variables, reference);
  const std::size_t n = variables.size();
  if (ordering.size() != n || graph.num_vars() != n)
    throw ModelError("ordering or graph does not match the variables");
  const StateSpace& space = p.space;
  if (space.num_vars() != n || !(u.space == space))
    throw ModelError("joint tables do not match the variables");
  for (VarId v = 0; v < n; ++v)
    if (space.cardinality(v) != variables[v].domain.size())
      throw ModelError("joint tables do not match the domain of '" + variables[v].name + "'");
  space.require_within(options.state_cap);

  std::vector<RestrictedPotential> pots[2];
  for (Layer layer : kBothLayers) {
    const JointTable& table = layer == Layer::probability ? p : u;
    auto& out = pots[layer == Layer::probability ? 0 : 1];
    for (VarId v = 0; v < n; ++v) {
      const VarSet below = graph.below(layer, v, ordering);
      const std::size_t own = space.cardinality(v);
      std::vector<double> values(space.size_of(below) * own);
      std::vector<ValueIndex> state(reference);
      for (std::size_t c = 0; c < values.size() / own; ++c) {
        std::size_t rest = c;
        for (std::size_t k = below.size(); k-- > 0;) {
          state[below[k]] = static_cast<ValueIndex>(rest % space.cardinality(below[k]));
          rest /= space.cardinality(below[k]);
        }
        state[v] = reference[v];
        const double base = table.at(state);
        for (ValueIndex x = 0; x < own; ++x) {
          state[v] = x;
          values[c * own + x] = x == reference[v] ? 1.0 : table.at(state) / base;
        }
      }
      out.emplace_back(v, layer, below, space, std::move(values));
    }
  }
  return build_network(std::move(variables), std::move(ordering), std::move(graph),
                       std::move(pots[0]), std::move(pots[1]), options);
}

// --- Joint computation -------------------------------------------------------

double joint_ratio(const Network& network, Layer layer, std::span<const ValueIndex> state) {
  network.check_state(state);
  double log_ratio = 0;
  for (VarId v : network.ordering().order())
    log_ratio += network.potential(layer, v).log_value(state);
  return std::exp(log_ratio);
}

ReconstructedJoint reconstruct_joint(const Network& network, std::uint64_t cap) {
  const StateSpace& space = network.space();
  space.require_within(cap);
  const std::size_t n = network.num_vars();
  const std::vector<ValueIndex> reference(network.reference_state().begin(),
                                          network.reference_state().end());

  ReconstructedJoint out;
  out.prob_ratio = {space, reference, std::vector<double>(space.size())};
  out.util_ratio = {space, reference, std::vector<double>(space.size())};

  detail::CompensatedSum mass;
  detail::CompensatedSum weighted;
  std::vector<ValueIndex> state(n, 0);
  const VarSet all = VarSet::all(n);
  std::uint64_t index = 0;
  do {
    double log_p = 0;
    double log_u = 0;
    for (VarId v : network.ordering().order()) {
      log_p += network.potential(Layer::probability, v).log_value(state);
      log_u += network.potential(Layer::utility, v).log_value(state);
    }
    const double p = std::exp(log_p);
    const double u = std::exp(log_u);
    out.prob_ratio.values[index] = p;
    out.util_ratio.values[index] = u;
    mass.add(p);
    weighted.add(p * u);
    ++index;
  } while (next_configuration(space, all, state));

  out.prob_mass = mass.value();
  out.utility_of_true = weighted.value() / out.prob_mass;
  out.probability.resize(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i)
    out.probability[i] = out.prob_ratio.values[i] / out.prob_mass;
  return out;
}

}  // namespace eun
