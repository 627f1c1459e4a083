#pragma once

#include "eun/event.hpp"
#include "eun/graph.hpp"
#include "eun/network.hpp"

namespace eun {

// p-/u-independence of a partition read off the graph: A is independent of
// B given C iff C separates A from B in the layer. A, B, C must partition
// the variables, with A and B non-empty.
bool declared_independent(const Network& network, Layer layer, const VarSet& a, const VarSet& b,
                          const VarSet& c);

struct RatioDeviation {
  double max_absolute = 0;
  double max_relative = 0;
};

// How far the ceteris-paribus ratio t(x_M, x_rest) / t(x0_M, x_rest) moves
// when the variables outside M and K change. The maximum is taken over all
// x of |ratio(x) - ratio(x with the remainder at reference)|.
RatioDeviation ratio_deviation(const JointTable& table, const VarSet& m, const VarSet& k);

// Partition form: M is independent of N - M - K given K iff the ratio of
// x_M depends on x_K only. An empty remainder is vacuously independent.
bool table_independent(const JointTable& table, const VarSet& m, const VarSet& k,
                       double tolerance = kDefaultTolerance);
bool table_independent(const ReconstructedJoint& joint, Layer layer, const VarSet& m,
                       const VarSet& k, double tolerance = kDefaultTolerance);

// General triples (A, B, C disjoint, remainder R = N - A - B - C): A is
// independent of B given C iff R can be split into R_A and R_B such that
// A + R_A is independent of B + R_B given C in partition form. For a
// partition this is exactly the partition form above.
bool table_independent(const JointTable& table, const VarSet& a, const VarSet& b, const VarSet& c,
                       double tolerance = kDefaultTolerance);

// The pointwise relation w(a | b, c, r) = w(a | b0, c, r) for all (a, b, c, r).
// It ignores how the non-A, non-B variables are split between C and R.
bool pointwise_ratio_invariant(const JointTable& table, const VarSet& a, const VarSet& b,
                               double tolerance = kDefaultTolerance);

// Arc {i, j} in a layer iff the ratio of x_i varies with x_j anywhere.
EunGraph derive_perfect_map(const JointTable& p, const JointTable& u,
                            double tolerance = kDefaultTolerance);

// Graph-sufficient test for conditional EU independence: C separates A from
// B in both layers. `false` means "not guaranteed", not "dependent".
bool eu_independent_vars(const Network& network, const VarSet& a, const VarSet& b,
                         const VarSet& c);

// u(E & F | G) == u(E | G) u(F | G) within relative tolerance.
bool eu_independent_events(const Network& network, const Event& e, const Event& f, const Event& g,
                           double tolerance = kDefaultTolerance);

}  // namespace eun
