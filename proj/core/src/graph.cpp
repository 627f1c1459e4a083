#include "eun/graph.hpp"

#include <string>

#include "eun/error.hpp"

namespace eun {

Ordering::Ordering(std::vector<VarId> order) : order_(std::move(order)) {
  rank_.assign(order_.size(), order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const VarId v = order_[k];
    if (v >= order_.size() || rank_[v] != order_.size())
      throw ModelError("ordering is not a permutation of the variables");
    rank_[v] = k;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<VarId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return Ordering(std::move(order));
}

EunGraph::EunGraph(std::size_t num_vars) : prob_(num_vars), util_(num_vars) {}

void EunGraph::add_arc(Layer layer, VarId a, VarId b) {
  if (a >= num_vars() || b >= num_vars())
    throw ModelError("arc references an undeclared variable");
  if (a == b) throw ModelError("self-loop on variable " + std::to_string(a));
  adjacency(layer)[a].insert(b);
  adjacency(layer)[b].insert(a);
}

bool EunGraph::has_arc(Layer layer, VarId a, VarId b) const {
  return adjacency(layer)[a].contains(b);
}

const VarSet& EunGraph::neighbors(Layer layer, VarId v) const { return adjacency(layer)[v]; }

VarSet EunGraph::below(Layer layer, VarId v, const Ordering& ordering) const {
  std::vector<VarId> out;
  for (VarId n : neighbors(layer, v))
    if (ordering.rank(n) < ordering.rank(v)) out.push_back(n);
  return VarSet(std::move(out));
}

VarSet EunGraph::above(Layer layer, VarId v, const Ordering& ordering) const {
  std::vector<VarId> out;
  for (VarId n : neighbors(layer, v))
    if (ordering.rank(n) > ordering.rank(v)) out.push_back(n);
  return VarSet(std::move(out));
}

std::vector<std::pair<VarId, VarId>> EunGraph::arcs(Layer layer) const {
  std::vector<std::pair<VarId, VarId>> out;
  for (VarId a = 0; a < num_vars(); ++a)
    for (VarId b : neighbors(layer, a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool separates(const EunGraph& graph, Layer layer, const VarSet& a, const VarSet& b,
               const VarSet& c) {
  const std::size_t n = graph.num_vars();
  for (const VarSet* s : {&a, &b, &c})
    for (VarId v : *s)
      if (v >= n) throw ArgumentError("unknown variable " + std::to_string(v));
  if (a.empty() || b.empty()) throw ArgumentError("separation needs non-empty A and B");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw ArgumentError("separation sets must be pairwise disjoint");

  // Breadth-first search from A that never enters C.
  std::vector<char> seen(n, 0);
  std::vector<VarId> frontier(a.begin(), a.end());
  for (VarId v : a) seen[v] = 1;
  for (VarId v : c) seen[v] = 1;
  while (!frontier.empty()) {
    const VarId v = frontier.back();
    frontier.pop_back();
    for (VarId next : graph.neighbors(layer, v)) {
      if (seen[next]) continue;
      if (b.contains(next)) return false;
      seen[next] = 1;
      frontier.push_back(next);
    }
  }
  return true;
}

std::vector<VarSet> components(const EunGraph& graph, std::span<const Layer> layers,
                               const VarSet& removed) {
  const std::size_t n = graph.num_vars();
  std::vector<char> seen(n, 0);
  for (VarId v : removed) seen[v] = 1;
  std::vector<VarSet> out;
  for (VarId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VarSet component;
    std::vector<VarId> frontier{start};
    seen[start] = 1;
    while (!frontier.empty()) {
      const VarId v = frontier.back();
      frontier.pop_back();
      component.insert(v);
      for (Layer layer : layers)
        for (VarId next : graph.neighbors(layer, v))
          if (!seen[next]) {
            seen[next] = 1;
            frontier.push_back(next);
          }
    }
    out.push_back(std::move(component));
  }
  return out;
}

}  // namespace eun
