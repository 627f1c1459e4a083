#pragma once

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "eun/event.hpp"
#include "eun/network.hpp"

namespace eun {

struct DecisionProblem {
  std::shared_ptr<const Network> network;
  // Controllable variables.
  VarSet decisions;
  Event evidence;
};

// Checks the problem invariants; throws ArgumentError.
void validate_problem(const DecisionProblem& problem);

struct DecisionResult {
  // Maximizers in lexicographic order of the decision values (by ordering
  // index), each a partial assignment over the decision variables.
  std::vector<PartialAssignment> argmax;
  double max_eu = 0;
  // Every candidate with its conditional EU u(d | F), in enumeration order.
  std::vector<std::pair<PartialAssignment, double>> candidates;
};

inline constexpr double kTieTolerance = 1e-9;

// Maximizes u(d | F) over joint assignments d of the decision variables.
DecisionResult optimal_decision(const DecisionProblem& problem,
                                double tie_tolerance = kTieTolerance);

// Splits the decision variables into blocks that `conditioning` separates
// from each other in both layers: decision variables share a block iff
// they are connected in the union of both subgraphs after deleting
// `conditioning`. The evidence must be a cylinder fixing exactly
// `conditioning`, which then guarantees the blocks are conditionally EU
// independent and can be optimized separately.
std::vector<VarSet> decompose_decisions(const DecisionProblem& problem, const VarSet& conditioning);

// Optimizes each block on its own and concatenates the per-block choices
// (first maximizer of each). `max_eu` is u(concatenation | F).
DecisionResult optimize_blockwise(const DecisionProblem& problem, const std::vector<VarSet>& blocks,
                                  double tie_tolerance = kTieTolerance);

enum class Relevance { relevant, payoff_irrelevant, strategically_irrelevant };

std::string_view relevance_name(Relevance r);

// payoff-irrelevant: every utility potential whose scope touches B is
// identically 1. strategically-irrelevant: additionally C separates B from
// every payoff-relevant variable in the probability layer.
Relevance classify_relevance(const Network& network, const VarSet& b, const VarSet& c);

}  // namespace eun
