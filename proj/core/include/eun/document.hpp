#pragma once

#include <string>
#include <string_view>

#include "eun/bayes_net.hpp"
#include "eun/event.hpp"
#include "eun/network.hpp"

namespace eun {

inline constexpr std::string_view kNetworkFormat = "eun/1";
inline constexpr std::string_view kBayesNetFormat = "bn/1";

// JSON network document -> label-level inputs. Throws DocumentError with a
// line/column or key path.
NetworkInput parse_network_input(std::string_view text);
Network parse_network(std::string_view text, const NetworkOptions& options = {});

// Reference rows and identity tables are omitted; doubles are written in
// shortest round-trip form so parse(serialize(n)) reproduces every table.
std::string serialize_network(const Network& network);

BayesNet parse_bayes_net(std::string_view text);

// "X=1,Y=0" -> cylinder event. "" or "True" -> the certain event.
PartialAssignment parse_assignment(const Network& network, std::string_view text);
Event parse_event(const Network& network, std::string_view text);
// "X,Y" -> variable set. "" -> empty set.
VarSet parse_var_set(const Network& network, std::string_view text);

std::string format_assignment(const Network& network, const PartialAssignment& x);

}  // namespace eun
