#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eun/types.hpp"

namespace eun {

// Position of every variable in the global order; lower rank = lower index.
class Ordering {
 public:
  Ordering() = default;
  // order[k] is the variable at position k. Must be a permutation.
  explicit Ordering(std::vector<VarId> order);
  static Ordering identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::size_t rank(VarId v) const { return rank_[v]; }
  VarId at(std::size_t position) const { return order_[position]; }
  const std::vector<VarId>& order() const { return order_; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<VarId> order_;
  std::vector<std::size_t> rank_;
};

// Undirected graph with a probability arc set and a utility arc set.
class EunGraph {
 public:
  EunGraph() = default;
  explicit EunGraph(std::size_t num_vars);

  std::size_t num_vars() const { return prob_.size(); }

  void add_arc(Layer layer, VarId a, VarId b);
  bool has_arc(Layer layer, VarId a, VarId b) const;

  const VarSet& neighbors(Layer layer, VarId v) const;
  // Neighbors ranked below / above `v` in `ordering`.
  VarSet below(Layer layer, VarId v, const Ordering& ordering) const;
  VarSet above(Layer layer, VarId v, const Ordering& ordering) const;

  // Arcs as (smaller id, larger id), sorted.
  std::vector<std::pair<VarId, VarId>> arcs(Layer layer) const;

  friend bool operator==(const EunGraph&, const EunGraph&) = default;

 private:
  std::vector<VarSet>& adjacency(Layer layer) { return layer == Layer::probability ? prob_ : util_; }
  const std::vector<VarSet>& adjacency(Layer layer) const {
    return layer == Layer::probability ? prob_ : util_;
  }

  std::vector<VarSet> prob_;
  std::vector<VarSet> util_;
};

// True iff every path from `a` to `b` in the layer's subgraph passes through
// `c`. `a` and `b` must be non-empty and the three sets pairwise disjoint.
bool separates(const EunGraph& graph, Layer layer, const VarSet& a, const VarSet& b,
               const VarSet& c);

// Connected components of the union of `layers`, after deleting `removed`.
// Components are ordered by their smallest member.
std::vector<VarSet> components(const EunGraph& graph, std::span<const Layer> layers,
                               const VarSet& removed);

}  // namespace eun
