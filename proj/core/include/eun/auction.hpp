#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "eun/decision.hpp"
#include "eun/network.hpp"

namespace eun {

// Two-bidder second-price auction from the first bidder's point of view,
// discretized to values and bids in {0, 1/K, ..., 1}.
//
// Variables: V (own value), B (own bid, the decision), S (opponent value),
// C (opponent bid), A (allocation: winner and price). Ties go to bidder 1.
struct AuctionModel {
  int grid = 2;
  // Mass moved onto every non-rule outcome of a deterministic table.
  double epsilon = 1e-6;
  // p(C = c | S = s) as rows s, columns c. Empty: truthful bidding with
  // epsilon smoothing.
  std::vector<std::vector<double>> opponent_bids;
};

struct VickreyAuction {
  AuctionModel model;
  std::shared_ptr<const Network> network;
  // Decision B with evidence True; auction_best_response conditions on V.
  DecisionProblem problem;
  VarId value_var = 0, bid_var = 1, opponent_value_var = 2, opponent_bid_var = 3,
        allocation_var = 4;

  double grid_value(ValueIndex k) const { return static_cast<double>(k) / model.grid; }
  // Grid index of `x`; throws ArgumentError when `x` is off the grid.
  ValueIndex grid_index(double x) const;
};

// Allocation outcome index for winner g in {1, 2} and price index m.
inline ValueIndex allocation_index(int winner, ValueIndex price) {
  return static_cast<ValueIndex>(2 * price + (winner == 1 ? 1 : 0));
}

VickreyAuction build_vickrey_auction(const AuctionModel& model,
                                     std::uint64_t state_cap = kDefaultStateCap);

struct BestResponse {
  double value = 0;
  std::vector<double> argmax_bids;
  // u(b | V = v) per grid bid.
  std::vector<double> eu_by_bid;
  bool truthful_is_optimal = false;
};

BestResponse auction_best_response(const VickreyAuction& auction, double value,
                                   double tie_tolerance = kTieTolerance);

}  // namespace eun
