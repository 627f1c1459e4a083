#include "eun/document.hpp"

#include <algorithm>
#include <initializer_list>

#include <nlohmann/json.hpp>

#include "eun/error.hpp"

namespace eun {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
}

void expect(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw DocumentError(path + ": " + what);
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  expect(j.is_object(), path, "expected an object");
  for (const auto& [key, value] : j.items())
    expect(std::find(allowed.begin(), allowed.end(), key) != allowed.end(),
           path.empty() ? key : path + "." + key, "unknown key");
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string item(const std::string& path, std::size_t k) {
  return path + "[" + std::to_string(k) + "]";
}

const json& required(const json& j, const std::string& path, std::string_view key) {
  auto it = j.find(key);
  expect(it != j.end(), child(path, key), "missing required key");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  expect(j.is_string(), path, "expected a string");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& path) {
  expect(j.is_number(), path, "expected a number");
  return j.get<double>();
}

const json& as_array(const json& j, const std::string& path) {
  expect(j.is_array(), path, "expected an array");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < as_array(j, path).size(); ++k)
    out.push_back(as_string(j[k], item(path, k)));
  return out;
}

void check_format(const json& doc, std::string_view format) {
  const std::string found = as_string(required(doc, "", "format"), "format");
  expect(found == format, "format", "expected \"" + std::string(format) + "\", found \"" + found + "\"");
}

std::vector<VariableSpec> parse_variables(const json& doc) {
  const json& vars = as_array(required(doc, "", "variables"), "variables");
  std::vector<VariableSpec> out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const std::string path = item("variables", k);
    check_keys(vars[k], path, {"name", "domain", "reference"});
    VariableSpec spec;
    spec.name = as_string(required(vars[k], path, "name"), child(path, "name"));
    spec.domain = string_list(required(vars[k], path, "domain"), child(path, "domain"));
    if (vars[k].contains("reference"))
      spec.reference = as_string(vars[k]["reference"], child(path, "reference"));
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const json& doc, std::string_view key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  const std::string path(key);
  const json& arcs = as_array(doc[std::string(key)], path);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::vector<std::string> pair = string_list(arcs[k], item(path, k));
    expect(pair.size() == 2, item(path, k), "expected two variable names");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_given(const json& entry,
                                                             const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!entry.contains("given")) return out;
  const std::string given_path = child(path, "given");
  expect(entry["given"].is_object(), given_path, "expected an object");
  for (const auto& [name, label] : entry["given"].items())
    out.emplace_back(name, as_string(label, child(given_path, name)));
  return out;
}

std::map<std::string, std::vector<RatioEntry>> parse_tables(const json& doc, std::string_view key) {
  std::map<std::string, std::vector<RatioEntry>> out;
  if (!doc.contains(key)) return out;
  const std::string path(key);
  const json& tables = doc[path];
  expect(tables.is_object(), path, "expected an object");
  for (const auto& [name, rows] : tables.items()) {
    const std::string table_path = child(path, name);
    std::vector<RatioEntry>& entries = out[name];
    for (std::size_t k = 0; k < as_array(rows, table_path).size(); ++k) {
      const std::string row_path = item(table_path, k);
      check_keys(rows[k], row_path, {"value", "given", "ratio"});
      RatioEntry entry;
      entry.value = as_string(required(rows[k], row_path, "value"), child(row_path, "value"));
      entry.given = parse_given(rows[k], row_path);
      entry.ratio = as_number(required(rows[k], row_path, "ratio"), child(row_path, "ratio"));
      entries.push_back(std::move(entry));
    }
  }
  return out;
}

ordered_json write_table(const Network& net, Layer layer) {
  ordered_json tables = ordered_json::object();
  for (VarId v = 0; v < net.num_vars(); ++v) {
    const RestrictedPotential& pot = net.potential(layer, v);
    if (pot.is_identity()) continue;
    ordered_json rows = ordered_json::array();
    std::vector<ValueIndex> state(net.num_vars(), 0);
    for (std::size_t c = 0; c < pot.num_configurations(); ++c) {
      pot.decode_configuration(c, state);
      for (ValueIndex x = 0; x < pot.own_cardinality(); ++x) {
        if (x == net.reference(v)) continue;
        ordered_json row;
        row["value"] = net.label(v, x);
        if (!pot.conditioning().empty()) {
          ordered_json given = ordered_json::object();
          for (VarId g : pot.conditioning()) given[net.variable(g).name] = net.label(g, state[g]);
          row["given"] = std::move(given);
        }
        row["ratio"] = pot.entry(c, x);
        rows.push_back(std::move(row));
      }
    }
    tables[net.variable(v).name] = std::move(rows);
  }
  return tables;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t comma = s.find(',');
    parts.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) return parts;
    s.remove_prefix(comma + 1);
  }
}

}  // namespace

NetworkInput parse_network_input(std::string_view text) {
  const json doc = parse_text(text);
  check_keys(doc, "", {"format", "variables", "ordering", "prob_arcs", "util_arcs", "q", "w"});
  check_format(doc, kNetworkFormat);
  NetworkInput input;
  input.variables = parse_variables(doc);
  if (doc.contains("ordering")) input.ordering = string_list(doc["ordering"], "ordering");
  input.prob_arcs = parse_pairs(doc, "prob_arcs");
  input.util_arcs = parse_pairs(doc, "util_arcs");
  input.q = parse_tables(doc, "q");
  input.w = parse_tables(doc, "w");
  return input;
}

Network parse_network(std::string_view text, const NetworkOptions& options) {
  return build_network(parse_network_input(text), options);
}

std::string serialize_network(const Network& net) {
  ordered_json doc;
  doc["format"] = kNetworkFormat;
  ordered_json vars = ordered_json::array();
  for (VarId v = 0; v < net.num_vars(); ++v) {
    ordered_json spec;
    spec["name"] = net.variable(v).name;
    spec["domain"] = net.variable(v).domain;
    spec["reference"] = net.label(v, net.reference(v));
    vars.push_back(std::move(spec));
  }
  doc["variables"] = std::move(vars);
  ordered_json ordering = ordered_json::array();
  for (VarId v : net.ordering().order()) ordering.push_back(net.variable(v).name);
  doc["ordering"] = std::move(ordering);
  for (Layer layer : kBothLayers) {
    ordered_json arcs = ordered_json::array();
    for (const auto& [a, b] : net.graph().arcs(layer))
      arcs.push_back({net.variable(a).name, net.variable(b).name});
    doc[layer == Layer::probability ? "prob_arcs" : "util_arcs"] = std::move(arcs);
  }
  doc["q"] = write_table(net, Layer::probability);
  doc["w"] = write_table(net, Layer::utility);
  return doc.dump(2) + "\n";
}

BayesNet parse_bayes_net(std::string_view text) {
  const json doc = parse_text(text);
  check_keys(doc, "", {"format", "variables", "ordering", "dag_edges", "cpts"});
  check_format(doc, kBayesNetFormat);
  BayesNet bn;
  bn.variables = parse_variables(doc);
  if (doc.contains("ordering")) bn.ordering = string_list(doc["ordering"], "ordering");
  bn.dag_edges = parse_pairs(doc, "dag_edges");

  const json& cpts = required(doc, "", "cpts");
  expect(cpts.is_object(), "cpts", "expected an object");
  for (const auto& [name, rows] : cpts.items()) {
    const std::string table_path = child("cpts", name);
    auto spec = std::find_if(bn.variables.begin(), bn.variables.end(),
                             [&](const VariableSpec& s) { return s.name == name; });
    expect(spec != bn.variables.end(), table_path, "unknown variable");
    std::vector<CptRow>& out = bn.cpts[name];
    for (std::size_t k = 0; k < as_array(rows, table_path).size(); ++k) {
      const std::string row_path = item(table_path, k);
      check_keys(rows[k], row_path, {"given", "probs"});
      CptRow row;
      row.given = parse_given(rows[k], row_path);
      const json& probs = required(rows[k], row_path, "probs");
      const std::string probs_path = child(row_path, "probs");
      expect(probs.is_object(), probs_path, "expected an object");
      for (const auto& [label, p] : probs.items())
        expect(std::find(spec->domain.begin(), spec->domain.end(), label) != spec->domain.end(),
               child(probs_path, label), "not a value of '" + name + "'");
      for (const std::string& label : spec->domain) {
        expect(probs.contains(label), child(probs_path, label), "missing probability");
        row.probs.push_back(as_number(probs[label], child(probs_path, label)));
      }
      out.push_back(std::move(row));
    }
  }
  return bn;
}

PartialAssignment parse_assignment(const Network& network, std::string_view text) {
  PartialAssignment out(network.num_vars());
  text = trim(text);
  if (text.empty() || text == "True") return out;
  for (std::string_view term : split(text)) {
    const std::size_t eq = term.find('=');
    if (eq == std::string_view::npos)
      throw ArgumentError("expected Var=value, got '" + std::string(term) + "'");
    const VarId v = network.id_of(trim(term.substr(0, eq)));
    if (out.is_fixed(v))
      throw ArgumentError("variable '" + network.variable(v).name + "' assigned twice");
    out.set(v, network.value_of(v, trim(term.substr(eq + 1))));
  }
  return out;
}

Event parse_event(const Network& network, std::string_view text) {
  return network.cylinder(parse_assignment(network, text));
}

VarSet parse_var_set(const Network& network, std::string_view text) {
  VarSet out;
  text = trim(text);
  if (text.empty()) return out;
  for (std::string_view name : split(text)) {
    if (name.empty()) throw ArgumentError("empty variable name in '" + std::string(text) + "'");
    out.insert(network.id_of(name));
  }
  return out;
}

std::string format_assignment(const Network& network, const PartialAssignment& x) {
  std::string out;
  for (VarId v = 0; v < x.num_vars(); ++v) {
    if (!x.is_fixed(v)) continue;
    if (!out.empty()) out += ",";
    out += network.variable(v).name + "=" + network.label(v, x.value(v));
  }
  return out.empty() ? "True" : out;
}

}  // namespace eun
