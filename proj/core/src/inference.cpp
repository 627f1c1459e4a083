#include "eun/inference.hpp"

#include <cmath>

#include "eun/elimination.hpp"
#include "eun/error.hpp"
#include "summation.hpp"

namespace eun {

namespace {

constexpr double kBayesAgreement = 1e-9;

void require_nonempty(const Event& e, const char* what) {
  if (e.empty()) throw UndefinedError(std::string(what) + " is empty");
}

double relative_utility(const Network& network, const Event& e) {
  const EventMass m = event_mass(network, e);
  return m.weighted_utility / m.prob;
}

}  // namespace

EventQuality classify(const MeasureTriple& m) {
  if (m.u_norm > 1) return EventQuality::good;
  if (m.u_norm < 1) return EventQuality::bad;
  return EventQuality::neutral;
}

EventMass event_mass(const Network& network, const Event& e) {
  if (!(e.space() == network.space())) throw ArgumentError("event does not belong to this network");
  const ReconstructedJoint& joint = network.joint();
  detail::CompensatedSum prob;
  detail::CompensatedSum weighted;
  e.for_each_index([&](std::uint64_t i) {
    const double p = joint.prob_ratio.values[i];
    prob.add(p);
    weighted.add(p * joint.util_ratio.values[i]);
  });
  return {prob.value(), weighted.value()};
}

double marginal_p_ratio(const Network& network, const PartialAssignment& x_m) {
  static constexpr Layer kProb[] = {Layer::probability};
  return summed_elimination(network, x_m, kProb);
}

double marginal_u_ratio(const Network& network, const PartialAssignment& x_m) {
  static constexpr Layer kProb[] = {Layer::probability};
  return summed_elimination(network, x_m, kBothLayers) / summed_elimination(network, x_m, kProb);
}

double probability(const Network& network, const Event& e) {
  return event_mass(network, e).prob / network.joint().prob_mass;
}

double conditional_probability(const Network& network, const Event& e, const Event& f,
                               bool allow_empty_intersection) {
  require_nonempty(f, "conditioning event");
  const Event ef = e & f;
  if (ef.empty()) {
    if (allow_empty_intersection) return 0.0;
    throw UndefinedError("E & F is empty");
  }
  return event_mass(network, ef).prob / event_mass(network, f).prob;
}

MeasureTriple event_utility(const Network& network, const Event& e) {
  require_nonempty(e, "event");
  const ReconstructedJoint& joint = network.joint();
  const EventMass m = event_mass(network, e);
  MeasureTriple out;
  out.p = m.prob / joint.prob_mass;
  out.u_rel = m.weighted_utility / m.prob;
  out.u_norm = out.u_rel / joint.utility_of_true;
  out.v = out.u_norm * out.p;
  return out;
}

double conditional_event_utility(const Network& network, const Event& e, const Event& f) {
  require_nonempty(f, "conditioning event");
  const Event ef = e & f;
  require_nonempty(ef, "E & F");
  return relative_utility(network, ef) / relative_utility(network, f);
}

double value(const Network& network, const Event& e) { return event_utility(network, e).v; }

double value(const Network& network, const Event& e, const Event& f) {
  return conditional_event_utility(network, e, f) * conditional_probability(network, e, f);
}

double utility_bayes(const Network& network, const Event& f, const Event& e) {
  const Event not_f = f.complement();
  require_nonempty(e, "E");
  require_nonempty(f, "F");
  require_nonempty(not_f, "complement of F");
  require_nonempty(e & f, "E & F");
  require_nonempty(e & not_f, "E & not F");

  const double u_e_given_f = conditional_event_utility(network, e, f);
  const double u_e_given_not_f = conditional_event_utility(network, e, not_f);
  const double u_f = event_utility(network, f).u_norm;
  const double u_not_f = event_utility(network, not_f).u_norm;
  const double p_f_given_e = conditional_probability(network, f, e);
  const double p_not_f_given_e = conditional_probability(network, not_f, e);

  const double numerator = u_e_given_f * u_f;
  const double result =
      numerator / (numerator * p_f_given_e + u_e_given_not_f * u_not_f * p_not_f_given_e);
  const double direct = conditional_event_utility(network, f, e);
  if (detail::relative_difference(result, direct) > kBayesAgreement)
    throw NumericError("modified Bayes rule disagrees with the direct conditional utility");
  return result;
}

double local_conditional_eu(const Network& network, const PartialAssignment& b,
                            const PartialAssignment& a) {
  const std::size_t n = network.num_vars();
  if (b.num_vars() != n || a.num_vars() != n)
    throw ArgumentError("partial assignment does not match the network");
  const VarSet bs = b.fixed_vars();
  const VarSet as = a.fixed_vars();
  if (bs.empty()) throw ArgumentError("b must fix at least one variable");
  if (!bs.disjoint(as)) throw ArgumentError("a and b fix overlapping variables");
  const VarSet rest = VarSet::all(n) - as - bs;
  if (!rest.empty())
    for (Layer layer : kBothLayers)
      if (!separates(network.graph(), layer, bs, rest, as))
        throw ArgumentError(std::string("A does not separate B from the remaining variables in the ") +
                            std::string(layer_name(layer)) + " layer");
  if (!network.passes_imap())
    throw ArgumentError("network is not Markov w.r.t. its graph; local shortcut refused");

  const VarSet local = as | bs;
  std::vector<ValueIndex> state(network.reference_state().begin(),
                                network.reference_state().end());
  a.apply_to(state);
  auto log_product = [&](Layer layer) {
    double sum = 0;
    for (VarId v : network.ordering().order())
      if (local.contains(v)) sum += network.potential(layer, v).log_value(state);
    return sum;
  };

  for (VarId v : bs) state[v] = network.reference(v);
  const double log_q0 = log_product(Layer::probability);
  const double log_w0 = log_product(Layer::utility);

  std::vector<double> q_ratio;
  std::vector<double> w_ratio;
  std::size_t target = 0;
  for_each_configuration(network.space(), bs, state, [&] {
    if (b.matches(state)) target = q_ratio.size();
    q_ratio.push_back(std::exp(log_product(Layer::probability) - log_q0));
    w_ratio.push_back(std::exp(log_product(Layer::utility) - log_w0));
  });

  detail::CompensatedSum q_total;
  for (double q : q_ratio) q_total.add(q);
  detail::CompensatedSum expected_w;
  for (std::size_t k = 0; k < q_ratio.size(); ++k)
    expected_w.add(w_ratio[k] * q_ratio[k] / q_total.value());
  return w_ratio[target] / expected_w.value();
}

}  // namespace eun
