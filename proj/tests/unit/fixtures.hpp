#pragma once

#include <string>

#include "eun/network.hpp"

namespace eun::testing {

// Two binary variables H, W with uniform p. Scenario 1: u table (1, 2, 3, 6).
inline Network health_wealth_1() {
  NetworkInput in;
  in.variables = {{"H", {"0", "1"}, "0"}, {"W", {"0", "1"}, "0"}};
  in.w["H"] = {{"1", {}, 3.0}};
  in.w["W"] = {{"1", {}, 2.0}};
  return build_network(in);
}

// Scenario 2: utility arc H-W, u table (1, 2, 3, 4).
inline Network health_wealth_2() {
  NetworkInput in;
  in.variables = {{"H", {"0", "1"}, "0"}, {"W", {"0", "1"}, "0"}};
  in.util_arcs = {{"H", "W"}};
  in.w["H"] = {{"1", {}, 3.0}};
  in.w["W"] = {{"1", {{"H", "0"}}, 2.0}, {"1", {{"H", "1"}}, 4.0 / 3.0}};
  return build_network(in);
}

// Binary chain X1 - X2 - X3 with q1(1) = 2, q2(1 | 1) = 3, q3(1 | 1) = 5.
// Joint ratios sum to 48; the (1, 1, 1) ratio is 30.
inline Network chain3() {
  NetworkInput in;
  in.variables = {{"X1", {"0", "1"}, ""}, {"X2", {"0", "1"}, ""}, {"X3", {"0", "1"}, ""}};
  in.prob_arcs = {{"X1", "X2"}, {"X2", "X3"}};
  in.q["X1"] = {{"1", {}, 2.0}};
  in.q["X2"] = {{"1", {{"X1", "0"}}, 1.0}, {"1", {{"X1", "1"}}, 3.0}};
  in.q["X3"] = {{"1", {{"X2", "0"}}, 1.0}, {"1", {{"X2", "1"}}, 5.0}};
  return build_network(in);
}

inline std::string data_file(const std::string& name) {
  return std::string(EUN_TEST_DATA_DIR) + "/" + name;
}

}  // namespace eun::testing
