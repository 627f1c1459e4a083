#include <gtest/gtest.h>

#include "eun/elimination.hpp"
#include "eun/error.hpp"
#include "eun/inference.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace eun {
namespace {

using testing::chain3;
using testing::health_wealth_1;

TEST(MarginalPRatio, Chain) {
  const Network net = chain3();
  EXPECT_NEAR(marginal_p_ratio(net, net.assignment({{"X3", "1"}})), 38.0, 1e-12);
  EXPECT_NEAR(marginal_p_ratio(net, PartialAssignment(3)), 48.0, 1e-12);
  EXPECT_NEAR(marginal_p_ratio(net, net.assignment({{"X1", "1"}, {"X2", "1"}, {"X3", "1"}})), 30.0,
              1e-12);
  const auto& p = net.joint().probability;
  EXPECT_NEAR(1.0 / p[0], 48.0, 1e-12);
}

TEST(MarginalPRatio, DenseNetworkTotalMass) {
  testing::Rng rng(8);
  const Network net = testing::random_restricted_network(rng, testing::binary(10), 0.6);
  EXPECT_NEAR(marginal_p_ratio(net, PartialAssignment(10)), net.joint().prob_mass,
              1e-12 * net.joint().prob_mass);
}

TEST(ConditionalProbability, Examples) {
  NetworkInput in;
  in.variables = {{"H", {"0", "1"}, ""}, {"W", {"0", "1"}, ""}};
  const Network uniform = build_network(in);
  EXPECT_DOUBLE_EQ(
      conditional_probability(uniform, uniform.cylinder({{"H", "1"}}), uniform.cylinder({{"W", "1"}})),
      0.5);

  const Network net = chain3();
  const Event x1 = net.cylinder({{"X1", "1"}});
  const Event x3 = net.cylinder({{"X3", "1"}});
  EXPECT_NEAR(conditional_probability(net, x1, x3), 32.0 / 38.0, 1e-14);
  EXPECT_NEAR(conditional_probability(net, x1, net.certain()), probability(net, x1), 1e-15);
  EXPECT_NEAR(probability(net, x1), 40.0 / 48.0, 1e-14);

  const Event x1_off = net.cylinder({{"X1", "0"}});
  EXPECT_THROW(conditional_probability(net, x1, x1_off), UndefinedError);
  EXPECT_EQ(conditional_probability(net, x1, x1_off, true), 0.0);
}

TEST(EventUtility, HealthWealth) {
  const Network net = health_wealth_1();
  const MeasureTriple all = event_utility(net, net.certain());
  EXPECT_NEAR(all.u_rel, 3.0, 1e-14);
  EXPECT_NEAR(all.u_norm, 1.0, 1e-15);
  EXPECT_NEAR(all.v, 1.0, 1e-15);
  const MeasureTriple h = event_utility(net, net.cylinder({{"H", "1"}}));
  EXPECT_NEAR(h.u_rel, 4.5, 1e-14);
  EXPECT_NEAR(h.u_norm, 1.5, 1e-14);
  EXPECT_NEAR(h.p, 0.5, 1e-15);
  EXPECT_EQ(classify(h), EventQuality::good);
  EXPECT_EQ(classify(event_utility(net, net.cylinder({{"H", "0"}}))), EventQuality::bad);
  EXPECT_NEAR(event_utility(net, net.cylinder({{"H", "1"}, {"W", "1"}})).u_rel, 6.0, 1e-14);
  EXPECT_NEAR(value(net, net.cylinder({{"H", "1"}})), 0.75, 1e-14);
  EXPECT_NEAR(value(net, net.certain()), 1.0, 1e-15);
  EXPECT_THROW(event_utility(net, net.certain().complement()), UndefinedError);
}

TEST(ConditionalEventUtility, HealthWealth) {
  const Network net = health_wealth_1();
  const Event h = net.cylinder({{"H", "1"}});
  const Event w = net.cylinder({{"W", "1"}});
  EXPECT_NEAR(conditional_event_utility(net, w, h), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(conditional_event_utility(net, w, net.certain()), event_utility(net, w).u_norm, 1e-15);
  EXPECT_NEAR(conditional_event_utility(net, h, h), 1.0, 1e-15);
  EXPECT_THROW(conditional_event_utility(net, h, h.complement()), UndefinedError);
  EXPECT_NEAR(value(net, w, h),
              conditional_event_utility(net, w, h) * conditional_probability(net, w, h), 1e-15);
}

TEST(UtilityBayes, HealthWealthAndErrors) {
  const Network net = health_wealth_1();
  const Event h = net.cylinder({{"H", "1"}});
  const Event w = net.cylinder({{"W", "1"}});
  EXPECT_NEAR(utility_bayes(net, w, h), 4.0 / 3.0, 1e-14);
  EXPECT_THROW(utility_bayes(net, net.certain(), h), UndefinedError);
}

TEST(UtilityBayes, RandomThreeVariableNetworks) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::random_restricted_network(rng, {2, 3, 2}, 0.6);
    const Event f = testing::random_event(rng, net);
    const Event e = testing::random_event(rng, net);
    if ((e & f).empty() || (e & f.complement()).empty() || f.complement().empty()) continue;
    EXPECT_NEAR(utility_bayes(net, f, e), conditional_event_utility(net, f, e),
                1e-9 * conditional_event_utility(net, f, e));
  }
}

TEST(MarginalURatio, Examples) {
  const Network net = health_wealth_1();
  EXPECT_NEAR(marginal_u_ratio(net, net.assignment({{"H", "1"}})), 4.5, 1e-14);
  EXPECT_NEAR(marginal_u_ratio(net, net.assignment({{"H", "1"}, {"W", "1"}})),
              joint_ratio(net, Layer::utility, Assignment({1, 1})), 1e-14);
}

// Same w, more probability mass on W = 1: the marginal utility of H = 1
// moves even though no utility potential changed.
TEST(MarginalURatio, DependsOnProbabilities) {
  NetworkInput in;
  in.variables = {{"H", {"0", "1"}, ""}, {"W", {"0", "1"}, ""}};
  in.w["H"] = {{"1", {}, 3.0}};
  in.w["W"] = {{"1", {}, 2.0}};
  const Network before = build_network(in);
  in.q["W"] = {{"1", {}, 2.0}};
  const Network after = build_network(in);
  const double u_before = marginal_u_ratio(before, before.assignment({{"H", "1"}}));
  const double u_after = marginal_u_ratio(after, after.assignment({{"H", "1"}}));
  EXPECT_NEAR(u_before, 4.5, 1e-14);
  EXPECT_NEAR(u_after, 3.0 * (1.0 / 3.0 + 2.0 * 2.0 / 3.0), 1e-14);
}

TEST(MarginalURatio, AgreesWithEventUtility) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::random_restricted_network(rng, {2, 3, 2, 2});
    const PartialAssignment x =
        testing::random_assignment(rng, net, testing::random_subset(rng, VarSet::all(4)));
    EXPECT_NEAR(marginal_u_ratio(net, x), event_utility(net, net.cylinder(x)).u_rel,
                1e-12 * marginal_u_ratio(net, x));
    EXPECT_NEAR(marginal_p_ratio(net, x), event_mass(net, net.cylinder(x)).prob,
                1e-12 * marginal_p_ratio(net, x));
  }
}

TEST(SummedElimination, MatchesEnumeration) {
  const Network net = chain3();
  const Layer both[] = {Layer::probability, Layer::utility};
  const PartialAssignment x = net.assignment({{"X2", "1"}});
  EXPECT_NEAR(summed_elimination(net, x, both), event_mass(net, net.cylinder(x)).weighted_utility,
              1e-12);
}

TEST(LocalConditionalEu, HealthWealthNoArcs) {
  const Network net = health_wealth_1();
  EXPECT_NEAR(local_conditional_eu(net, net.assignment({{"H", "1"}}), PartialAssignment(2)), 1.5,
              1e-14);
}

TEST(LocalConditionalEu, ChainMiddleSeparates) {
  const Network net = chain3();
  const PartialAssignment b = net.assignment({{"X1", "1"}});
  const PartialAssignment a = net.assignment({{"X2", "1"}});
  EXPECT_NEAR(local_conditional_eu(net, b, a),
              conditional_event_utility(net, net.cylinder(b), net.cylinder(a)), 1e-12);
}

TEST(LocalConditionalEu, RefusesWithoutSeparation) {
  const Network net = chain3();
  EXPECT_THROW(local_conditional_eu(net, net.assignment({{"X1", "1"}}), PartialAssignment(3)),
               ArgumentError);
}

}  // namespace
}  // namespace eun
