#pragma once

#include <span>

#include "eun/network.hpp"

namespace eun {

// Sum over every completion of `evidence` of the product of the stored
// potentials of `layers`. Free variables are summed out one at a time in
// ordering order; intermediate factors larger than the network's state cap
// raise CapExceededError.
//
// With layers = {probability} this is p(x_M) / p(x0); with both layers it
// is sum_{x_rest} p(x)/p(x0) * u(x)/u(x0).
double summed_elimination(const Network& network, const PartialAssignment& evidence,
                          std::span<const Layer> layers);

}  // namespace eun
