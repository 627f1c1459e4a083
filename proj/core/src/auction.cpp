#include "eun/auction.hpp"

#include <charconv>
#include <cmath>

#include "eun/bayes_net.hpp"
#include "eun/error.hpp"

namespace eun {

namespace {

std::string shortest(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::vector<double> smoothed_row(std::size_t size, std::size_t hit, double epsilon) {
  std::vector<double> row(size, epsilon);
  row[hit] = 1.0 - static_cast<double>(size - 1) * epsilon;
  return row;
}

}  // namespace

ValueIndex VickreyAuction::grid_index(double x) const {
  const double scaled = x * model.grid;
  const long long k = std::llround(scaled);
  if (!std::isfinite(x) || k < 0 || k > model.grid ||
      std::fabs(static_cast<double>(k) / model.grid - x) > 1e-9)
    throw ArgumentError("value " + shortest(x) + " is not on the grid {0, 1/" +
                        std::to_string(model.grid) + ", ..., 1}");
  return static_cast<ValueIndex>(k);
}

VickreyAuction build_vickrey_auction(const AuctionModel& model, std::uint64_t state_cap) {
  const int k = model.grid;
  if (k < 2) throw ArgumentError("grid resolution must be at least 2");
  if (!(model.epsilon > 0 && model.epsilon < 1e-3))
    throw ArgumentError("epsilon must lie in (0, 1e-3)");
  const std::size_t points = static_cast<std::size_t>(k) + 1;
  const std::size_t outcomes = 2 * points;

  std::vector<std::string> grid;
  for (std::size_t i = 0; i < points; ++i) grid.push_back(shortest(static_cast<double>(i) / k));
  std::vector<std::string> allocations(outcomes);
  for (std::size_t m = 0; m < points; ++m) {
    allocations[allocation_index(2, m)] = "lose@" + grid[m];
    allocations[allocation_index(1, m)] = "win@" + grid[m];
  }

  BayesNet bn;
  bn.variables = {{"V", grid, ""}, {"B", grid, ""}, {"S", grid, ""}, {"C", grid, ""},
                  {"A", allocations, ""}};
  bn.dag_edges = {{"V", "B"}, {"S", "C"}, {"B", "A"}, {"C", "A"}};
  const std::vector<double> uniform(points, 1.0 / static_cast<double>(points));
  bn.cpts["V"] = {CptRow{{}, uniform}};
  bn.cpts["S"] = {CptRow{{}, uniform}};
  for (std::size_t v = 0; v < points; ++v) {
    bn.cpts["B"].push_back(CptRow{{{"V", grid[v]}}, uniform});
  }

  if (!model.opponent_bids.empty()) {
    if (model.opponent_bids.size() != points)
      throw ArgumentError("opponent bid table needs one row per opponent value");
    for (std::size_t s = 0; s < points; ++s) {
      if (model.opponent_bids[s].size() != points)
        throw ArgumentError("opponent bid table needs one column per grid bid");
      bn.cpts["C"].push_back(CptRow{{{"S", grid[s]}}, model.opponent_bids[s]});
    }
  } else {
    for (std::size_t s = 0; s < points; ++s)
      bn.cpts["C"].push_back(CptRow{{{"S", grid[s]}}, smoothed_row(points, s, model.epsilon)});
  }

  // Ties go to bidder 1, who then pays the opponent's bid.
  for (std::size_t b = 0; b < points; ++b)
    for (std::size_t c = 0; c < points; ++c) {
      const ValueIndex hit = b >= c ? allocation_index(1, c) : allocation_index(2, b);
      bn.cpts["A"].push_back(
          CptRow{{{"B", grid[b]}, {"C", grid[c]}}, smoothed_row(outcomes, hit, model.epsilon)});
    }

  JointTable p;
  try {
    p = bayes_net_joint(bn, state_cap);
  } catch (const ModelError& e) {
    throw ArgumentError(std::string("invalid auction model: ") + e.what());
  }

  // u(x) / u(x0) = w(a | v): (1 + v) / (1 + m) for a win at price m, else 1.
  JointTable u{p.space, p.reference, std::vector<double>(p.values.size(), 1.0)};
  std::vector<ValueIndex> state(5, 0);
  for (std::uint64_t i = 0; i < u.values.size(); ++i) {
    p.space.decode(i, state);
    const ValueIndex a = state[4];
    if (a % 2 == 1) {
      const double v = static_cast<double>(state[0]) / k;
      const double m = static_cast<double>(a / 2) / k;
      u.values[i] = (1.0 + v) / (1.0 + m);
    }
  }

  EunGraph graph(5);
  const std::vector<std::pair<VarId, VarId>> edges = {{0, 1}, {2, 3}, {1, 4}, {3, 4}};
  for (const auto& [a, b] : moralize(5, edges)) graph.add_arc(Layer::probability, a, b);
  graph.add_arc(Layer::utility, 0, 4);

  NetworkOptions options;
  options.state_cap = state_cap;
  auto network = std::make_shared<const Network>(
      network_from_tables(bn.variables, Ordering::identity(5), std::move(graph), p, u, options));

  VickreyAuction out;
  out.model = model;
  out.network = network;
  out.problem = DecisionProblem{network, VarSet{1}, network->certain()};
  return out;
}

BestResponse auction_best_response(const VickreyAuction& auction, double value,
                                   double tie_tolerance) {
  const ValueIndex v = auction.grid_index(value);
  const Network& net = *auction.network;
  PartialAssignment evidence(net.num_vars());
  evidence.set(auction.value_var, v);

  DecisionProblem problem = auction.problem;
  problem.evidence = net.cylinder(evidence);
  const DecisionResult result = optimal_decision(problem, tie_tolerance);

  BestResponse out;
  out.value = auction.grid_value(v);
  for (const auto& [bid, eu] : result.candidates) out.eu_by_bid.push_back(eu);
  for (const PartialAssignment& bid : result.argmax) {
    const ValueIndex b = bid.value(auction.bid_var);
    out.argmax_bids.push_back(auction.grid_value(b));
    if (b == v) out.truthful_is_optimal = true;
  }
  return out;
}

}  // namespace eun
