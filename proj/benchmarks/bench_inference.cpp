#include <benchmark/benchmark.h>

#include "eun/auction.hpp"
#include "eun/elimination.hpp"
#include "eun/imap.hpp"
#include "eun/inference.hpp"
#include "generators.hpp"

namespace {

using namespace eun;

static void BM_ReconstructJoint(benchmark::State& state) {
  testing::Rng rng(1);
  const Network net = testing::random_restricted_network(rng, testing::binary(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_joint(net).prob_mass);
  state.SetItemsProcessed(state.iterations() * net.space().size());
}
BENCHMARK(BM_ReconstructJoint)->DenseRange(8, 16, 4);

static void BM_MarginalElimination(benchmark::State& state) {
  testing::Rng rng(2);
  const Network net = testing::random_restricted_network(rng, testing::binary(state.range(0)), 0.2);
  PartialAssignment x(net.num_vars());
  x.set(0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(marginal_p_ratio(net, x));
}
BENCHMARK(BM_MarginalElimination)->DenseRange(8, 16, 4);

static void BM_EventUtility(benchmark::State& state) {
  testing::Rng rng(3);
  const Network net = testing::random_restricted_network(rng, testing::binary(state.range(0)));
  const Event e = testing::random_event(rng, net);
  net.joint();
  for (auto _ : state) benchmark::DoNotOptimize(event_utility(net, e).u_norm);
}
BENCHMARK(BM_EventUtility)->DenseRange(6, 14, 4);

static void BM_ValidateImap(benchmark::State& state) {
  testing::Rng rng(4);
  const Network net = testing::random_markov_network(rng, testing::binary(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_imap(net).ok());
}
BENCHMARK(BM_ValidateImap)->DenseRange(6, 12, 3);

static void BM_AuctionBestResponse(benchmark::State& state) {
  const VickreyAuction auction = build_vickrey_auction({static_cast<int>(state.range(0)), 1e-6, {}});
  for (auto _ : state) benchmark::DoNotOptimize(auction_best_response(auction, 0.5).argmax_bids.size());
}
BENCHMARK(BM_AuctionBestResponse)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
