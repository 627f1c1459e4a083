#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eun/network.hpp"

namespace eun {

struct CptRow {
  std::vector<std::pair<std::string, std::string>> given;
  // One probability per domain value, in domain order.
  std::vector<double> probs;
};

struct BayesNet {
  std::vector<VariableSpec> variables;
  // Optional ordering for the resulting network; empty: a topological order
  // that prefers declaration order.
  std::vector<std::string> ordering;
  std::vector<std::pair<std::string, std::string>> dag_edges;  // parent -> child
  std::map<std::string, std::vector<CptRow>> cpts;
};

inline constexpr double kCptSumTolerance = 1e-9;

// Moral graph: parent-child arcs plus arcs between co-parents.
std::vector<std::pair<VarId, VarId>> moralize(std::size_t num_vars,
                                              const std::vector<std::pair<VarId, VarId>>& edges);

// CPT-product joint over the full space, after validating the DAG and CPTs.
JointTable bayes_net_joint(const BayesNet& bn, std::uint64_t cap = kDefaultStateCap);

// Probability layer: moral graph with restricted potentials read off the
// CPT-product joint. Utility layer empty with w = 1.
Network bn_to_eun(const BayesNet& bn, const NetworkOptions& options = {});

}  // namespace eun
