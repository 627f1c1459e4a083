#pragma once

#include "eun/event.hpp"
#include "eun/network.hpp"

namespace eun {

struct MeasureTriple {
  double p = 0;       // p(E)
  double u_rel = 0;   // u(E) / u(x0)
  double u_norm = 0;  // u(E) with u(True) = 1
  double v = 0;       // u_norm * p
};

enum class EventQuality { bad, neutral, good };

EventQuality classify(const MeasureTriple& m);

// Sums of p(x)/p(x0) and p(x)/p(x0) * u(x)/u(x0) over the states of `e`.
struct EventMass {
  double prob = 0;
  double weighted_utility = 0;
};
EventMass event_mass(const Network& network, const Event& e);

double marginal_p_ratio(const Network& network, const PartialAssignment& x_m);
double marginal_u_ratio(const Network& network, const PartialAssignment& x_m);

// p(E | F). An empty E & F is an error unless `allow_empty_intersection`.
double conditional_probability(const Network& network, const Event& e, const Event& f,
                               bool allow_empty_intersection = false);
double probability(const Network& network, const Event& e);

MeasureTriple event_utility(const Network& network, const Event& e);

// u(E | F) = u(E & F) / u(F); independent of the normalization.
double conditional_event_utility(const Network& network, const Event& e, const Event& f);

double value(const Network& network, const Event& e);
double value(const Network& network, const Event& e, const Event& f);

// u(F | E) through the modified Bayes rule; throws NumericError if it
// disagrees with conditional_event_utility beyond 1e-9 relative.
double utility_bayes(const Network& network, const Event& f, const Event& e);

// u(b | a) from the mantle ratios of A and B alone. Requires A (the
// variables fixed by `a`) to separate B (fixed by `b`) from the remaining
// variables in both layers, and the network to pass validate_imap.
double local_conditional_eu(const Network& network, const PartialAssignment& b,
                            const PartialAssignment& a);

}  // namespace eun
