#include "eun/bayes_net.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "eun/error.hpp"

namespace eun {

namespace {

struct Cpt {
  VarSet parents;
  std::vector<double> probs;  // parent configuration (mixed radix) x own value
};

struct CompiledNet {
  std::vector<std::pair<VarId, VarId>> edges;
  std::vector<VarId> topological;
  std::vector<Cpt> cpts;
  StateSpace space;
};

CompiledNet compile(const BayesNet& bn) {
  const std::size_t n = bn.variables.size();
  std::unordered_map<std::string, VarId> ids;
  std::vector<std::size_t> cards;
  for (VarId v = 0; v < n; ++v) {
    const VariableSpec& spec = bn.variables[v];
    if (!ids.emplace(spec.name, v).second) throw ModelError("duplicate variable '" + spec.name + "'");
    if (spec.domain.size() < 2)
      throw ModelError("variable '" + spec.name + "' needs at least two domain values");
    cards.push_back(spec.domain.size());
  }
  auto lookup = [&](const std::string& name, const std::string& where) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ModelError(where + ": unknown variable '" + name + "'");
    return it->second;
  };

  CompiledNet out;
  out.space = StateSpace(cards);
  std::vector<VarSet> parents(n);
  for (const auto& [from, to] : bn.dag_edges) {
    const VarId p = lookup(from, "dag edge");
    const VarId c = lookup(to, "dag edge");
    if (p == c) throw ModelError("self-loop on '" + from + "'");
    if (!parents[c].contains(p)) out.edges.emplace_back(p, c);
    parents[c].insert(p);
  }

  // Kahn's algorithm, always taking the smallest ready id.
  std::vector<std::size_t> missing(n, 0);
  for (VarId v = 0; v < n; ++v) missing[v] = parents[v].size();
  std::set<VarId> ready;
  for (VarId v = 0; v < n; ++v)
    if (missing[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    const VarId v = *ready.begin();
    ready.erase(ready.begin());
    out.topological.push_back(v);
    for (VarId c = 0; c < n; ++c)
      if (parents[c].contains(v) && --missing[c] == 0) ready.insert(c);
  }
  if (out.topological.size() != n) throw ModelError("dag_edges contain a cycle");

  for (const auto& [name, rows] : bn.cpts) lookup(name, "cpts");
  out.cpts.resize(n);
  for (VarId v = 0; v < n; ++v) {
    const VariableSpec& spec = bn.variables[v];
    const std::string where = "cpts[" + spec.name + "]";
    auto it = bn.cpts.find(spec.name);
    if (it == bn.cpts.end()) throw ModelError(where + ": missing conditional probability table");
    Cpt& cpt = out.cpts[v];
    cpt.parents = parents[v];
    const std::size_t own = cards[v];
    cpt.probs.assign(out.space.size_of(cpt.parents) * own, -1.0);
    for (const CptRow& row : it->second) {
      std::vector<ValueIndex> state(n, 0);
      VarSet given;
      for (const auto& [pname, plabel] : row.given) {
        const VarId p = lookup(pname, where);
        if (!cpt.parents.contains(p))
          throw ModelError(where + ": '" + pname + "' is not a parent of '" + spec.name + "'");
        if (given.contains(p)) throw ModelError(where + ": '" + pname + "' given twice");
        given.insert(p);
        const auto& domain = bn.variables[p].domain;
        auto label = std::find(domain.begin(), domain.end(), plabel);
        if (label == domain.end())
          throw ModelError(where + ": '" + plabel + "' is not a value of '" + pname + "'");
        state[p] = static_cast<ValueIndex>(label - domain.begin());
      }
      if (given != cpt.parents) throw ModelError(where + ": row does not give every parent");
      if (row.probs.size() != own) throw ModelError(where + ": row needs one probability per value");
      double sum = 0;
      for (double x : row.probs) {
        if (!(x > 0) || !std::isfinite(x))
          throw ModelError(where + ": CPT entries must be strictly positive");
        sum += x;
      }
      if (std::fabs(sum - 1.0) > kCptSumTolerance)
        throw ModelError(where + ": row sums to " + std::to_string(sum) + ", not 1");
      std::size_t configuration = 0;
      for (VarId p : cpt.parents) configuration = configuration * cards[p] + state[p];
      if (cpt.probs[configuration * own] >= 0) throw ModelError(where + ": duplicate row");
      std::copy(row.probs.begin(), row.probs.end(), cpt.probs.begin() + configuration * own);
    }
    for (double x : cpt.probs)
      if (x < 0) throw ModelError(where + ": missing rows for some parent values");
  }
  return out;
}

}  // namespace

std::vector<std::pair<VarId, VarId>> moralize(std::size_t num_vars,
                                              const std::vector<std::pair<VarId, VarId>>& edges) {
  std::set<std::pair<VarId, VarId>> arcs;
  auto add = [&](VarId a, VarId b) {
    if (a != b) arcs.emplace(std::min(a, b), std::max(a, b));
  };
  std::vector<std::vector<VarId>> parents(num_vars);
  for (const auto& [p, c] : edges) {
    add(p, c);
    parents[c].push_back(p);
  }
  for (const auto& ps : parents)
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) add(ps[i], ps[j]);
  return {arcs.begin(), arcs.end()};
}

JointTable bayes_net_joint(const BayesNet& bn, std::uint64_t cap) {
  const CompiledNet net = compile(bn);
  net.space.require_within(cap);
  const std::size_t n = bn.variables.size();

  JointTable out;
  out.space = net.space;
  out.reference.assign(n, 0);
  for (VarId v = 0; v < n; ++v) {
    const VariableSpec& spec = bn.variables[v];
    if (!spec.reference.empty()) {
      auto it = std::find(spec.domain.begin(), spec.domain.end(), spec.reference);
      if (it == spec.domain.end())
        throw ModelError("reference value '" + spec.reference + "' is not in the domain of '" +
                         spec.name + "'");
      out.reference[v] = static_cast<ValueIndex>(it - spec.domain.begin());
    }
  }
  out.values.reserve(net.space.size());
  std::vector<ValueIndex> state(n, 0);
  const VarSet all = VarSet::all(n);
  do {
    double p = 1.0;
    for (VarId v : net.topological) {
      const Cpt& cpt = net.cpts[v];
      std::size_t configuration = 0;
      for (VarId q : cpt.parents)
        configuration = configuration * net.space.cardinality(q) + state[q];
      p *= cpt.probs[configuration * net.space.cardinality(v) + state[v]];
    }
    out.values.push_back(p);
  } while (next_configuration(net.space, all, state));
  return out;
}

Network bn_to_eun(const BayesNet& bn, const NetworkOptions& options) {
  const CompiledNet compiled = compile(bn);
  const JointTable p = bayes_net_joint(bn, options.state_cap);
  const std::size_t n = bn.variables.size();

  EunGraph graph(n);
  for (const auto& [a, b] : moralize(n, compiled.edges)) graph.add_arc(Layer::probability, a, b);

  Ordering ordering(compiled.topological);
  if (!bn.ordering.empty()) {
    if (bn.ordering.size() != n) throw ModelError("ordering does not list every variable");
    std::vector<VarId> order;
    for (const std::string& name : bn.ordering) {
      auto it = std::find_if(bn.variables.begin(), bn.variables.end(),
                             [&](const VariableSpec& s) { return s.name == name; });
      if (it == bn.variables.end()) throw ModelError("ordering: unknown variable '" + name + "'");
      order.push_back(static_cast<VarId>(it - bn.variables.begin()));
    }
    ordering = Ordering(std::move(order));
  }

  JointTable u{p.space, p.reference, std::vector<double>(p.values.size(), 1.0)};
  return network_from_tables(bn.variables, std::move(ordering), std::move(graph), p, u, options);
}

}  // namespace eun
