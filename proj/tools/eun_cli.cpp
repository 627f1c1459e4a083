#include "eun_cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "eun/auction.hpp"
#include "eun/decision.hpp"
#include "eun/document.hpp"
#include "eun/error.hpp"
#include "eun/imap.hpp"
#include "eun/independence.hpp"
#include "eun/inference.hpp"

namespace eun::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::uint64_t state_cap() {
  const char* env = std::getenv("EUN_STATE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultStateCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0) throw UsageError("EUN_STATE_CAP must be a positive integer");
  return cap;
}

std::string number(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(12) << x;
  return s.str();
}

std::string grid_number(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

Network load_network(const std::string& path, bool strict = false) {
  NetworkOptions options;
  options.state_cap = state_cap();
  options.strict = strict;
  return parse_network(read_file(path), options);
}

struct Options {
  std::string net_path;
  bool strict = false;
  bool prob = false, eu = false, value = false;
  std::string event, given;
  bool has_given = false;
  std::string layer;
  std::string a, b, c;
  std::string decisions;
  std::string output;
  int grid = 2;
  double epsilon = 1e-6;
  double bid_value = 0;
};

void run_validate(const Options& o, std::ostream& out) {
  const Network net = load_network(o.net_path);
  const ImapReport report = validate_imap(net);
  if (report.ok()) {
    out << "ok: " << net.num_vars() << " variables, joint is Markov with respect to the graph\n";
    return;
  }
  for (const ImapViolation& v : report.violations) {
    PartialAssignment witness(net.num_vars());
    for (VarId i = 0; i < net.num_vars(); ++i) witness.set(i, v.witness[i]);
    out << "violation: " << layer_name(v.layer) << " potential of '"
        << net.variable(v.variable).name << "' depends on variables outside its mantle at "
        << format_assignment(net, witness) << " (relative deviation "
        << number(v.relative_deviation) << ")\n";
  }
  out << report.violations.size() << " violation(s)\n";
  if (o.strict) throw ModelError("network fails validate_imap");
}

void run_query(const Options& o, std::ostream& out) {
  const Network net = load_network(o.net_path);
  const Event e = parse_event(net, o.event);
  if (o.has_given) {
    const Event g = parse_event(net, o.given);
    if (o.prob) out << number(conditional_probability(net, e, g)) << "\n";
    if (o.eu) out << number(conditional_event_utility(net, e, g)) << "\n";
    if (o.value) out << number(value(net, e, g)) << "\n";
    return;
  }
  if (o.prob) out << number(probability(net, e)) << "\n";
  if (o.eu) out << number(event_utility(net, e).u_norm) << "\n";
  if (o.value) out << number(value(net, e)) << "\n";
}

void run_independence(const Options& o, std::ostream& out) {
  const Network net = load_network(o.net_path);
  const VarSet a = parse_var_set(net, o.a);
  const VarSet b = parse_var_set(net, o.b);
  const VarSet c = parse_var_set(net, o.c);
  if (o.layer == "eu") {
    if (eu_independent_vars(net, a, b, c))
      out << "independent (guaranteed by Theorem 2)\n";
    else
      out << "not guaranteed (C does not separate A from B in both layers)\n";
    return;
  }
  const Layer layer = o.layer == "prob" ? Layer::probability : Layer::utility;
  if (separates(net.graph(), layer, a, b, c))
    out << "independent (C separates A from B in the " << layer_name(layer) << " layer)\n";
  else
    out << "not guaranteed (C does not separate A from B in the " << layer_name(layer)
        << " layer)\n";
}

void run_decide(const Options& o, std::ostream& out) {
  auto net = std::make_shared<const Network>(load_network(o.net_path));
  DecisionProblem problem{net, parse_var_set(*net, o.decisions), parse_event(*net, o.event)};
  const DecisionResult result = optimal_decision(problem);
  for (const auto& [d, eu] : result.candidates)
    out << "u(" << format_assignment(*net, d) << " | evidence) = " << number(eu) << "\n";
  out << "max " << number(result.max_eu) << "\n";
  out << "argmax {";
  for (std::size_t k = 0; k < result.argmax.size(); ++k)
    out << (k ? "; " : "") << format_assignment(*net, result.argmax[k]);
  out << "}\n";
}

void run_import(const Options& o, std::ostream& out) {
  NetworkOptions options;
  options.state_cap = state_cap();
  const Network net = bn_to_eun(parse_bayes_net(read_file(o.net_path)), options);
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.output + "'");
  file << serialize_network(net);
  if (!file.flush()) throw UsageError("cannot write '" + o.output + "'");
  out << "wrote " << o.output << " (" << net.num_vars() << " variables, "
      << net.graph().arcs(Layer::probability).size() << " probability arcs)\n";
}

void run_auction(const Options& o, std::ostream& out) {
  AuctionModel model;
  model.grid = o.grid;
  model.epsilon = o.epsilon;
  const VickreyAuction auction = build_vickrey_auction(model, state_cap());
  const BestResponse best = auction_best_response(auction, o.bid_value);
  for (std::size_t k = 0; k < best.eu_by_bid.size(); ++k)
    out << "u(B=" << grid_number(auction.grid_value(static_cast<ValueIndex>(k))) << " | V="
        << grid_number(best.value) << ") = " << number(best.eu_by_bid[k]) << "\n";
  out << "argmax {";
  for (std::size_t k = 0; k < best.argmax_bids.size(); ++k)
    out << (k ? ", " : "") << grid_number(best.argmax_bids[k]);
  out << "}\n";
  out << "truthful bid " << grid_number(best.value)
      << (best.truthful_is_optimal ? " is optimal\n" : " is NOT optimal\n");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Expected utility network engine", "eun"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check that the joint is Markov w.r.t. the graph");
  validate->add_option("network", o.net_path, "Network document")->required();
  validate->add_flag("--strict", o.strict, "Fail (exit 2) when violations are found");

  auto* query = app.add_subcommand("query", "Probability, expected utility or value of an event");
  query->add_option("network", o.net_path, "Network document")->required();
  auto* prob = query->add_flag("--prob", o.prob, "p(E) or p(E | G)");
  auto* eu = query->add_flag("--eu", o.eu, "u(E) with u(True) = 1, or u(E | G)");
  auto* val = query->add_flag("--value", o.value, "v(E) or v(E | G)");
  prob->excludes(eu)->excludes(val);
  eu->excludes(val);
  query->add_option("-e,--event", o.event, "Event, e.g. X=1,Y=0")->required();
  auto* given = query->add_option("-g,--given", o.given, "Conditioning event");

  auto* independence = app.add_subcommand("independence", "Graph independence of variable sets");
  independence->add_option("network", o.net_path, "Network document")->required();
  independence->add_option("--layer", o.layer, "prob, util or eu")
      ->required()
      ->check(CLI::IsMember({"prob", "util", "eu"}));
  independence->add_option("-a", o.a, "Variables A")->required();
  independence->add_option("-b", o.b, "Variables B")->required();
  independence->add_option("-c", o.c, "Conditioning variables C");

  auto* decide = app.add_subcommand("decide", "Optimal values of decision variables");
  decide->add_option("network", o.net_path, "Network document")->required();
  decide->add_option("-d,--decisions", o.decisions, "Decision variables")->required();
  decide->add_option("-e,--evidence", o.event, "Evidence event");

  auto* import = app.add_subcommand("import-bn", "Convert a Bayes-net document");
  import->add_option("bayes_net", o.net_path, "Bayes-net document")->required();
  import->add_option("-o,--output", o.output, "Output network document")->required();

  auto* auction = app.add_subcommand("auction", "Best response in a discretized Vickrey auction");
  auction->add_option("--grid", o.grid, "Grid resolution K")->required();
  auction->add_option("--eps", o.epsilon, "Smoothing epsilon");
  auction->add_option("--value", o.bid_value, "Own value on the grid")->required();

  CommandResult result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (query->parsed() && !(o.prob || o.eu || o.value))
      throw UsageError("query needs one of --prob, --eu, --value");
    o.has_given = given->count() > 0;

    if (validate->parsed()) run_validate(o, out);
    if (query->parsed()) run_query(o, out);
    if (independence->parsed()) run_independence(o, out);
    if (decide->parsed()) run_decide(o, out);
    if (import->parsed()) run_import(o, out);
    if (auction->parsed()) run_auction(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const DocumentError& e) {
    err << "invalid document: " << e.what() << "\n";
    result.exit_code = kValidation;
  } catch (const ModelError& e) {
    err << "invalid network: " << e.what() << "\n";
    result.exit_code = kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kNumeric;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace eun::cli
