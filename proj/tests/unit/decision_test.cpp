#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "eun/auction.hpp"
#include "eun/decision.hpp"
#include "eun/error.hpp"
#include "eun/inference.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace eun {
namespace {

std::shared_ptr<const Network> shared(Network net) {
  return std::make_shared<const Network>(std::move(net));
}

TEST(OptimalDecision, HealthWealth) {
  auto net = shared(testing::health_wealth_1());
  const DecisionResult r = optimal_decision({net, {0}, net->certain()});
  ASSERT_EQ(r.argmax.size(), 1u);
  EXPECT_EQ(r.argmax[0].value(0), 1u);
  EXPECT_NEAR(r.max_eu, 1.5, 1e-14);
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_NEAR(r.candidates[0].second, 0.5, 1e-14);
}

TEST(OptimalDecision, ConstantUtilityTiesEverything) {
  NetworkInput in;
  in.variables = {{"A", {"0", "1", "2"}, ""}, {"B", {"0", "1"}, ""}, {"C", {"0", "1"}, ""}};
  in.prob_arcs = {{"B", "C"}};
  in.q["C"] = {{"1", {{"B", "0"}}, 2.0}, {"1", {{"B", "1"}}, 0.5}};
  auto net = shared(build_network(in));
  const DecisionResult r = optimal_decision({net, {0, 1}, net->certain()});
  ASSERT_EQ(r.argmax.size(), 6u);
  // Lexicographic order by ordering index.
  EXPECT_EQ(r.argmax[1].value(0), 0u);
  EXPECT_EQ(r.argmax[1].value(1), 1u);
  EXPECT_EQ(r.argmax[2].value(0), 1u);
}

TEST(OptimalDecision, ValidatesTheProblem) {
  auto net = shared(testing::health_wealth_1());
  EXPECT_THROW(optimal_decision({net, {}, net->certain()}), ArgumentError);
  EXPECT_THROW(optimal_decision({nullptr, {0}, net->certain()}), ArgumentError);
  EXPECT_THROW(optimal_decision({net, {0}, net->cylinder({{"H", "1"}})}), ArgumentError);
  EXPECT_THROW(optimal_decision({net, {0}, net->certain().complement()}), UndefinedError);
  EXPECT_THROW(optimal_decision({net, {5}, net->certain()}), ArgumentError);
}

TEST(DecomposeDecisions, DisconnectedAndConnected) {
  NetworkInput in;
  in.variables = {{"D1", {"0", "1"}, ""}, {"D2", {"0", "1"}, ""}, {"Y", {"0", "1"}, ""}};
  auto apart = shared(build_network(in));
  const auto blocks = decompose_decisions({apart, {0, 1}, apart->certain()}, {});
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], VarSet{0});
  EXPECT_EQ(blocks[1], VarSet{1});

  in.util_arcs = {{"D1", "D2"}, {"D1", "Y"}, {"D2", "Y"}};
  auto joined = shared(build_network(in));
  EXPECT_EQ(decompose_decisions({joined, {0, 1}, joined->certain()}, {}).size(), 1u);

  // Y separates D1 from D2 once it is fixed.
  in.util_arcs = {{"D1", "Y"}, {"D2", "Y"}};
  auto star = shared(build_network(in));
  const Event y = star->cylinder({{"Y", "1"}});
  EXPECT_EQ(decompose_decisions({star, {0, 1}, y}, {2}).size(), 2u);
  EXPECT_THROW(decompose_decisions({star, {0, 1}, star->certain()}, {2}), ArgumentError);
  EXPECT_THROW(decompose_decisions({star, {0, 1}, y}, {0}), ArgumentError);
}

TEST(OptimizeBlockwise, MatchesGlobalOnSmallNetwork) {
  testing::Rng rng(21);
  EunGraph g(4);
  g.add_arc(Layer::probability, 0, 2);
  g.add_arc(Layer::utility, 0, 2);
  g.add_arc(Layer::probability, 1, 3);
  g.add_arc(Layer::utility, 1, 3);
  g.add_arc(Layer::utility, 2, 3);
  auto net = shared(testing::markov_network(rng, {3, 2, 2, 2}, g, Ordering::identity(4)));
  // Decisions 0 and 1 with evidence on 2 and 3.
  const Event f = net->cylinder(testing::random_assignment(rng, *net, {2, 3}));
  const DecisionProblem problem{net, {0, 1}, f};
  const auto blocks = decompose_decisions(problem, {2, 3});
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_NEAR(optimize_blockwise(problem, blocks).max_eu, optimal_decision(problem).max_eu, 1e-12);
  EXPECT_THROW(optimize_blockwise(problem, {VarSet{0}}), ArgumentError);
}

TEST(ClassifyRelevance, Examples) {
  NetworkInput in;
  in.variables = {{"B", {"0", "1"}, ""}, {"Y", {"0", "1"}, ""}, {"Z", {"0", "1"}, ""}};
  in.prob_arcs = {{"B", "Y"}};
  in.q["Y"] = {{"1", {{"B", "0"}}, 0.5}, {"1", {{"B", "1"}}, 3.0}};
  in.w["Y"] = {{"1", {}, 2.0}};
  const Network instrumental = build_network(in);
  EXPECT_EQ(classify_relevance(instrumental, {0}, {}), Relevance::payoff_irrelevant);
  EXPECT_EQ(classify_relevance(instrumental, {0}, {1}), Relevance::strategically_irrelevant);
  EXPECT_EQ(classify_relevance(instrumental, {2}, {}), Relevance::strategically_irrelevant);
  // u(b) / u(b') still differs: B is purely instrumental to Y.
  const double u0 = event_utility(instrumental, instrumental.cylinder({{"B", "0"}})).u_norm;
  const double u1 = event_utility(instrumental, instrumental.cylinder({{"B", "1"}})).u_norm;
  EXPECT_GT(std::fabs(u1 / u0 - 1.0), 0.1);
  const double z0 = event_utility(instrumental, instrumental.cylinder({{"Z", "0"}})).u_norm;
  const double z1 = event_utility(instrumental, instrumental.cylinder({{"Z", "1"}})).u_norm;
  EXPECT_NEAR(z1 / z0, 1.0, 1e-12);

  in.w["B"] = {{"1", {}, 1.5}};
  EXPECT_EQ(classify_relevance(build_network(in), {0}, {}), Relevance::relevant);
  EXPECT_THROW(classify_relevance(instrumental, {}, {}), ArgumentError);
  EXPECT_THROW(classify_relevance(instrumental, {7}, {}), ArgumentError);
  EXPECT_EQ(relevance_name(Relevance::payoff_irrelevant), "payoff-irrelevant");
}

TEST(VickreyAuction, AllocationRowAndPayoffs) {
  const double eps = 1e-6;
  const VickreyAuction auction = build_vickrey_auction({2, eps, {}});
  const Network& net = *auction.network;
  const Event bc = net.cylinder({{"B", "0.5"}, {"C", "0"}});
  for (ValueIndex a = 0; a < 6; ++a) {
    PartialAssignment x(5);
    x.set(auction.allocation_var, a);
    const double expected = a == allocation_index(1, 0) ? 1 - 5 * eps : eps;
    EXPECT_NEAR(conditional_probability(net, net.cylinder(x), bc), expected, 1e-12);
  }
  EXPECT_EQ(net.label(auction.allocation_var, allocation_index(1, 1)), "win@0.5");

  std::vector<ValueIndex> state(5, 0);
  state[auction.value_var] = 2;
  state[auction.allocation_var] = allocation_index(1, 1);
  EXPECT_NEAR(net.potential(Layer::utility, auction.allocation_var).value(state), 4.0 / 3.0, 1e-15);
  state[auction.allocation_var] = allocation_index(2, 1);
  EXPECT_EQ(net.potential(Layer::utility, auction.allocation_var).value(state), 1.0);
  EXPECT_TRUE(net.passes_imap());
}

TEST(VickreyAuction, BestResponses) {
  const VickreyAuction auction = build_vickrey_auction({2, 1e-9, {}});
  const BestResponse half = auction_best_response(auction, 0.5);
  EXPECT_EQ(half.argmax_bids, (std::vector<double>{0, 0.5}));
  EXPECT_TRUE(half.truthful_is_optimal);
  ASSERT_EQ(half.eu_by_bid.size(), 3u);
  EXPECT_NEAR(half.eu_by_bid[0] / half.eu_by_bid[2], 3.5 / 3.25, 1e-7);
  EXPECT_NEAR(half.eu_by_bid[1] / half.eu_by_bid[2], 3.5 / 3.25, 1e-7);

  EXPECT_EQ(auction_best_response(auction, 0).argmax_bids, std::vector<double>{0});
  EXPECT_THROW(auction_best_response(auction, 0.3), ArgumentError);
  EXPECT_THROW(auction_best_response(auction, 1.5), ArgumentError);
}

TEST(VickreyAuction, RejectsBadModels) {
  EXPECT_THROW(build_vickrey_auction({1, 1e-6, {}}), ArgumentError);
  EXPECT_THROW(build_vickrey_auction({2, 0, {}}), ArgumentError);
  EXPECT_THROW(build_vickrey_auction({2, 1e-3, {}}), ArgumentError);
  EXPECT_THROW(build_vickrey_auction({2, 1e-6, {{0.5, 0.5}}}), ArgumentError);
  EXPECT_THROW(build_vickrey_auction({2, 1e-6, {{1, 0, 0}, {0.2, 0.3, 0.5}, {0.2, 0.3, 0.5}}}),
               ArgumentError);
}

TEST(VickreyAuction, UniformOpponentBids) {
  const std::vector<double> row(3, 1.0 / 3.0);
  const VickreyAuction auction = build_vickrey_auction({2, 1e-9, {row, row, row}});
  EXPECT_EQ(auction_best_response(auction, 0.5).argmax_bids, (std::vector<double>{0, 0.5}));
  EXPECT_EQ(auction_best_response(auction, 1).argmax_bids, (std::vector<double>{0.5, 1}));
}

}  // namespace
}  // namespace eun
