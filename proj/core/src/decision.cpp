#include "eun/decision.hpp"

#include <algorithm>

#include "eun/error.hpp"
#include "eun/inference.hpp"

namespace eun {

namespace {

double relative_utility(const Network& network, const Event& e) {
  const EventMass m = event_mass(network, e);
  return m.weighted_utility / m.prob;
}

}  // namespace

void validate_problem(const DecisionProblem& problem) {
  if (!problem.network) throw ArgumentError("decision problem has no network");
  const Network& net = *problem.network;
  if (problem.decisions.empty()) throw ArgumentError("no decision variables");
  for (VarId d : problem.decisions)
    if (d >= net.num_vars()) throw ArgumentError("unknown decision variable " + std::to_string(d));
  if (!(problem.evidence.space() == net.space()))
    throw ArgumentError("evidence does not belong to the network");
  if (problem.evidence.empty()) throw UndefinedError("evidence event is empty");
  if (problem.evidence.is_cylinder() &&
      !problem.decisions.disjoint(problem.evidence.fixed().fixed_vars()))
    throw ArgumentError("evidence fixes a decision variable");
}

DecisionResult optimal_decision(const DecisionProblem& problem, double tie_tolerance) {
  validate_problem(problem);
  const Network& net = *problem.network;
  const StateSpace& space = net.space();
  if (space.size_of(problem.decisions) > net.state_cap())
    throw CapExceededError("too many joint decisions to enumerate");

  // Lexicographic by ordering index: the highest-ranked decision varies fastest.
  std::vector<VarId> by_rank(problem.decisions.begin(), problem.decisions.end());
  std::sort(by_rank.begin(), by_rank.end(),
            [&](VarId a, VarId b) { return net.ordering().rank(a) < net.ordering().rank(b); });

  const double evidence_utility = relative_utility(net, problem.evidence);
  DecisionResult result;
  PartialAssignment d(net.num_vars());
  for (VarId v : by_rank) d.set(v, 0);
  while (true) {
    const Event joint = net.cylinder(d) & problem.evidence;
    if (joint.empty()) throw UndefinedError("a decision is incompatible with the evidence");
    result.candidates.emplace_back(d, relative_utility(net, joint) / evidence_utility);

    std::size_t k = by_rank.size();
    for (; k-- > 0;) {
      const VarId v = by_rank[k];
      if (d.value(v) + 1 < space.cardinality(v)) {
        d.set(v, d.value(v) + 1);
        break;
      }
      d.set(v, 0);
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }

  result.max_eu = result.candidates.front().second;
  for (const auto& [candidate, eu] : result.candidates) result.max_eu = std::max(result.max_eu, eu);
  for (const auto& [candidate, eu] : result.candidates)
    if (result.max_eu - eu <= tie_tolerance * result.max_eu) result.argmax.push_back(candidate);
  return result;
}

std::vector<VarSet> decompose_decisions(const DecisionProblem& problem,
                                        const VarSet& conditioning) {
  validate_problem(problem);
  const Network& net = *problem.network;
  for (VarId v : conditioning)
    if (v >= net.num_vars()) throw ArgumentError("unknown conditioning variable");
  if (!conditioning.disjoint(problem.decisions))
    throw ArgumentError("conditioning set overlaps the decisions");
  if (!problem.evidence.is_cylinder() || problem.evidence.fixed().fixed_vars() != conditioning)
    throw ArgumentError("evidence must fix exactly the conditioning variables");

  std::vector<VarSet> blocks;
  for (const VarSet& component : components(net.graph(), kBothLayers, conditioning)) {
    VarSet block = component & problem.decisions;
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return blocks;
}

DecisionResult optimize_blockwise(const DecisionProblem& problem, const std::vector<VarSet>& blocks,
                                  double tie_tolerance) {
  validate_problem(problem);
  const Network& net = *problem.network;
  VarSet covered;
  PartialAssignment choice(net.num_vars());
  for (const VarSet& block : blocks) {
    if (!covered.disjoint(block)) throw ArgumentError("decision blocks overlap");
    covered = covered | block;
    const DecisionResult local =
        optimal_decision(DecisionProblem{problem.network, block, problem.evidence}, tie_tolerance);
    for (VarId v : block) choice.set(v, local.argmax.front().value(v));
  }
  if (covered != problem.decisions) throw ArgumentError("blocks do not cover the decisions");

  DecisionResult result;
  result.max_eu = conditional_event_utility(net, net.cylinder(choice), problem.evidence);
  result.argmax.push_back(choice);
  result.candidates.emplace_back(choice, result.max_eu);
  return result;
}

std::string_view relevance_name(Relevance r) {
  switch (r) {
    case Relevance::payoff_irrelevant:
      return "payoff-irrelevant";
    case Relevance::strategically_irrelevant:
      return "strategically-irrelevant";
    case Relevance::relevant:
      break;
  }
  return "relevant";
}

Relevance classify_relevance(const Network& network, const VarSet& b, const VarSet& c) {
  const std::size_t n = network.num_vars();
  for (VarId v : b | c)
    if (v >= n) throw ArgumentError("unknown variable " + std::to_string(v));
  if (b.empty()) throw ArgumentError("B must be non-empty");
  if (!b.disjoint(c)) throw ArgumentError("B and C must be disjoint");

  VarSet payoff_relevant;
  for (VarId v = 0; v < n; ++v) {
    const RestrictedPotential& w = network.potential(Layer::utility, v);
    if (w.is_identity()) continue;
    payoff_relevant = payoff_relevant | w.conditioning();
    payoff_relevant.insert(v);
  }
  if (!b.disjoint(payoff_relevant)) return Relevance::relevant;

  const VarSet targets = payoff_relevant - c;
  if (targets.empty() || separates(network.graph(), Layer::probability, b, targets, c))
    return Relevance::strategically_irrelevant;
  return Relevance::payoff_irrelevant;
}

}  // namespace eun
