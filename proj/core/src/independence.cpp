#include "eun/independence.hpp"

#include <algorithm>
#include <cmath>

#include "eun/error.hpp"
#include "eun/inference.hpp"
#include "summation.hpp"

namespace eun {

namespace {

void require_partition(std::size_t n, const VarSet& a, const VarSet& b, const VarSet& c) {
  for (const VarSet* s : {&a, &b, &c})
    for (VarId v : *s)
      if (v >= n) throw ArgumentError("unknown variable " + std::to_string(v));
  if (a.empty() || b.empty()) throw ArgumentError("A and B must be non-empty");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw ArgumentError("A, B and C must be pairwise disjoint");
  if ((a | b | c) != VarSet::all(n)) throw ArgumentError("A, B and C must partition the variables");
}

void check_table(const JointTable& table) {
  for (double x : table.values)
    if (!(x > 0) || !std::isfinite(x)) throw ArgumentError("joint table has a non-positive entry");
}

std::uint64_t at_reference(const JointTable& table, const VarSet& vars,
                           std::span<const ValueIndex> state, std::uint64_t index) {
  for (VarId v : vars)
    index = detail::replace_digit(index, table.space.stride(v), state[v], table.reference[v]);
  return index;
}

}  // namespace

bool declared_independent(const Network& network, Layer layer, const VarSet& a, const VarSet& b,
                          const VarSet& c) {
  require_partition(network.num_vars(), a, b, c);
  return separates(network.graph(), layer, a, b, c);
}

RatioDeviation ratio_deviation(const JointTable& table, const VarSet& m, const VarSet& k) {
  const StateSpace& space = table.space;
  const std::size_t n = space.num_vars();
  for (VarId v : m | k)
    if (v >= n) throw ArgumentError("unknown variable " + std::to_string(v));
  if (m.empty()) throw ArgumentError("M must be non-empty");
  if (!m.disjoint(k)) throw ArgumentError("M and K must be disjoint");
  check_table(table);

  const VarSet rest = VarSet::all(n) - m - k;
  RatioDeviation out;
  if (rest.empty()) return out;

  std::vector<ValueIndex> state(n, 0);
  std::uint64_t index = 0;
  const VarSet all = VarSet::all(n);
  do {
    const std::uint64_t anchored = at_reference(table, rest, state, index);
    const double ratio = table.values[index] / table.values[at_reference(table, m, state, index)];
    const double anchored_ratio =
        table.values[anchored] / table.values[at_reference(table, m, state, anchored)];
    out.max_absolute = std::max(out.max_absolute, std::fabs(ratio - anchored_ratio));
    out.max_relative =
        std::max(out.max_relative, detail::relative_difference(ratio, anchored_ratio));
    ++index;
  } while (next_configuration(space, all, state));
  return out;
}

bool table_independent(const JointTable& table, const VarSet& m, const VarSet& k,
                       double tolerance) {
  return ratio_deviation(table, m, k).max_relative <= tolerance;
}

bool table_independent(const ReconstructedJoint& joint, Layer layer, const VarSet& m,
                       const VarSet& k, double tolerance) {
  return table_independent(layer == Layer::probability ? joint.prob_ratio : joint.util_ratio, m, k,
                           tolerance);
}

bool table_independent(const JointTable& table, const VarSet& a, const VarSet& b, const VarSet& c,
                       double tolerance) {
  const std::size_t n = table.space.num_vars();
  for (VarId v : a | b | c)
    if (v >= n) throw ArgumentError("unknown variable " + std::to_string(v));
  if (a.empty() || b.empty()) throw ArgumentError("A and B must be non-empty");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw ArgumentError("A, B and C must be pairwise disjoint");

  const VarSet rest = VarSet::all(n) - a - b - c;
  if (rest.size() > 20) throw CapExceededError("too many remaining variables to split");
  const std::uint64_t splits = std::uint64_t{1} << rest.size();
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    VarSet side = a;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask >> k & 1) side.insert(rest[k]);
    if (table_independent(table, side, c, tolerance)) return true;
  }
  return false;
}

bool pointwise_ratio_invariant(const JointTable& table, const VarSet& a, const VarSet& b,
                               double tolerance) {
  if (!a.disjoint(b)) throw ArgumentError("A and B must be disjoint");
  if (b.empty()) throw ArgumentError("B must be non-empty");
  return table_independent(table, a, VarSet::all(table.space.num_vars()) - a - b, tolerance);
}

EunGraph derive_perfect_map(const JointTable& p, const JointTable& u, double tolerance) {
  if (!(p.space == u.space)) throw ArgumentError("tables live in different state spaces");
  const std::size_t n = p.space.num_vars();
  EunGraph graph(n);
  const VarSet all = VarSet::all(n);
  for (Layer layer : kBothLayers) {
    const JointTable& table = layer == Layer::probability ? p : u;
    for (VarId i = 0; i < n; ++i)
      for (VarId j = i + 1; j < n; ++j)
        if (!table_independent(table, VarSet{i}, all - VarSet{i, j}, tolerance))
          graph.add_arc(layer, i, j);
  }
  return graph;
}

bool eu_independent_vars(const Network& network, const VarSet& a, const VarSet& b,
                         const VarSet& c) {
  require_partition(network.num_vars(), a, b, c);
  return separates(network.graph(), Layer::probability, a, b, c) &&
         separates(network.graph(), Layer::utility, a, b, c);
}

bool eu_independent_events(const Network& network, const Event& e, const Event& f, const Event& g,
                           double tolerance) {
  const Event eg = e & g;
  const Event fg = f & g;
  const Event efg = eg & f;
  if (eg.empty() || fg.empty() || efg.empty())
    throw UndefinedError("conditional utility undefined: empty intersection with the condition");
  const double joint = conditional_event_utility(network, efg, g);
  const double product =
      conditional_event_utility(network, eg, g) * conditional_event_utility(network, fg, g);
  return detail::relative_difference(joint, product) <= tolerance;
}

}  // namespace eun
