#pragma once

#include <vector>

#include "eun/network.hpp"

namespace eun {

// Full-mantle ratio q(x_i | x_P(i)) (or w(x_i | x_U(i))) derived from the
// reconstructed joint. `table` is conditioned on the whole mantle; entries
// are read with every non-mantle variable at its reference value.
struct MantleTable {
  RestrictedPotential table;
  // Largest relative change of any entry across completions of the
  // non-mantle variables. Zero for a network that is Markov w.r.t. its graph.
  double max_relative_spread = 0;
};

// Throws ModelError in strict mode when the spread exceeds `tolerance`.
MantleTable full_mantle_potential(const Network& network, Layer layer, VarId variable,
                                  bool strict = false, double tolerance = kDefaultTolerance);

struct ImapViolation {
  VarId variable;
  Layer layer;
  // State at which the full-conditional ratio departs from its value with
  // the non-mantle variables at reference.
  Assignment witness;
  double relative_deviation;
};

struct ImapReport {
  std::vector<ImapViolation> violations;
  bool ok() const { return violations.empty(); }
  bool mentions(VarId variable) const;
};

// Checks, for every variable and both layers, that the full-conditional
// ratio depends only on the declared mantle. One violation is reported per
// (variable, layer, own value, mantle configuration): the worst witness.
ImapReport validate_imap(const Network& network, double tolerance = kDefaultTolerance);

}  // namespace eun
