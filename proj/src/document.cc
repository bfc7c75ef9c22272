// Copyright 2026 The Collat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "collat/document.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "collat/errors.h"

namespace collat {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    const auto colon = what.find("parse error");
    throw DocumentError("malformed JSON at " + line_column(text, byte) + ": " +
                        (colon == std::string::npos ? what : what.substr(colon)));
  }
}

void expect_keys(const json& object, const std::string& where,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!object.is_object()) fail(where.empty() ? "/" : where, "expected an object");
  for (std::string_view key : required) {
    if (!object.contains(std::string(key))) fail(where, "missing field \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (std::string_view k : required) known = known || k == key;
    for (std::string_view k : optional) known = known || k == key;
    if (!known) fail(where + "/" + key, "unknown field");
  }
}

Rational rational_at(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(mpz_class(value.dump(), 10));
  if (value.is_number_float()) {
    try {
      parse_rational(value.dump());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
    fail(where, "floating-point literal; write the value as an exact string");
  }
  if (!value.is_string()) fail(where, "expected a rational string such as \"5/2\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::string string_at(const json& value, const std::string& where) {
  if (!value.is_string()) fail(where, "expected a string");
  return value.get<std::string>();
}

VertexId vertex_at(const InvestmentNetwork& net, const json& value, const std::string& where) {
  const std::string name = string_at(value, where);
  const std::optional<VertexId> v = net.find_vertex(name);
  if (!v) fail(where, "unknown vertex \"" + name + "\"");
  return *v;
}

}  // namespace

InvestmentNetwork parse_network(std::string_view text) {
  const json doc = parse_json(text);
  expect_keys(doc, "", {"version", "vertices", "edges"}, {"meta"});
  if (!doc["version"].is_number_integer() || doc["version"].get<long>() != kDocumentVersion) {
    fail("/version", "unsupported version; expected " + std::to_string(kDocumentVersion));
  }
  InvestmentNetwork net;
  const json& vertices = doc["vertices"];
  if (!vertices.is_array()) fail("/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const json& record = vertices[i];
    expect_keys(record, where, {"id"}, {"z", "alpha"});
    const std::string id = string_at(record["id"], where + "/id");
    if (id.empty()) fail(where + "/id", "empty vertex id");
    if (net.find_vertex(id)) fail(where + "/id", "duplicate vertex id \"" + id + "\"");
    const VertexId v = net.add_vertex(id);
    if (record.contains("z")) net.set_cost(v, rational_at(record["z"], where + "/z"));
    if (record.contains("alpha")) net.set_rate(v, rational_at(record["alpha"], where + "/alpha"));
  }
  const json& edges = doc["edges"];
  if (!edges.is_array()) fail("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const json& record = edges[i];
    expect_keys(record, where, {"enterprise", "investor", "amount"});
    const VertexId k = vertex_at(net, record["enterprise"], where + "/enterprise");
    const VertexId v = vertex_at(net, record["investor"], where + "/investor");
    if (net.find_edge(k, v)) {
      fail(where, "duplicate edge (" + net.name(k) + "," + net.name(v) + ")");
    }
    net.add_edge(k, v, rational_at(record["amount"], where + "/amount"));
  }
  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    if (!meta.is_object()) fail("/meta", "expected an object of strings");
    for (const auto& [key, value] : meta.items()) {
      net.meta()[key] = string_at(value, "/meta/" + key);
    }
  }
  return net;
}

nlohmann::ordered_json network_to_json(const InvestmentNetwork& net) {
  std::set<std::string> names;
  nlohmann::ordered_json doc;
  doc["version"] = kDocumentVersion;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!names.insert(net.name(v)).second) {
      throw DocumentError("vertex name \"" + net.name(v) + "\" is not unique");
    }
    nlohmann::ordered_json record;
    record["id"] = net.name(v);
    record["z"] = to_string(net.cost(v));
    record["alpha"] = to_string(net.rate(v));
    doc["vertices"].push_back(std::move(record));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& edge : net.edges()) {
    nlohmann::ordered_json record;
    record["enterprise"] = net.name(edge.enterprise);
    record["investor"] = net.name(edge.investor);
    record["amount"] = to_string(edge.amount);
    doc["edges"].push_back(std::move(record));
  }
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : net.meta()) doc["meta"][key] = value;
  return doc;
}

std::string serialize_network(const InvestmentNetwork& net) {
  return network_to_json(net).dump(2) + "\n";
}

CollateralMatrix parse_collaterals(const InvestmentNetwork& net, std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("/", "expected an object");
  if (!doc.contains("collaterals")) fail("", "missing field \"collaterals\"");
  const json& list = doc["collaterals"];
  if (!list.is_array()) fail("/collaterals", "expected an array");
  CollateralMatrix c = CollateralMatrix::zero(net);
  std::vector<bool> seen(net.num_edges(), false);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "/collaterals/" + std::to_string(i);
    const json& record = list[i];
    expect_keys(record, where, {"enterprise", "investor", "amount"}, {"decimal"});
    const VertexId k = vertex_at(net, record["enterprise"], where + "/enterprise");
    const VertexId v = vertex_at(net, record["investor"], where + "/investor");
    const std::optional<EdgeId> e = net.find_edge(k, v);
    if (!e) fail(where, "no edge (" + net.name(k) + "," + net.name(v) + ") in the network");
    if (seen[*e]) fail(where, "edge (" + net.name(k) + "," + net.name(v) + ") listed twice");
    seen[*e] = true;
    const Rational amount = rational_at(record["amount"], where + "/amount");
    if (amount < 0) fail(where + "/amount", "collateral must be non-negative");
    c.set(*e, amount);
  }
  return c;
}

nlohmann::ordered_json collaterals_to_json(const InvestmentNetwork& net,
                                           const CollateralMatrix& c) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    nlohmann::ordered_json record;
    record["enterprise"] = net.name(net.edge(e).enterprise);
    record["investor"] = net.name(net.edge(e).investor);
    record["amount"] = to_string(c[e]);
    record["decimal"] = decimal_hint(c[e]);
    list.push_back(std::move(record));
  }
  return list;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << text;
  if (!out) throw DocumentError("error writing " + path.string());
}

}  // namespace collat
