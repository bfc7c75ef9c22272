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

#include "collat/cli.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "collat/analysis.h"
#include "collat/document.h"
#include "collat/errors.h"
#include "collat/instances.h"
#include "collat/network_solver.h"

namespace collat {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct OutputOptions {
  std::string format = "text";
  std::string out_file;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return Format::kText;
}

std::string edge_name(const InvestmentNetwork& net, EdgeId e) { return net.edge_label(e); }

Json edge_json(const InvestmentNetwork& net, EdgeId e) {
  Json j;
  j["enterprise"] = net.name(net.edge(e).enterprise);
  j["investor"] = net.name(net.edge(e).investor);
  return j;
}

Json witness_json(const InvestmentNetwork& net, const std::optional<InfeasibilityWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["vertices"] = Json::array();
  for (VertexId v : w->vertices) j["vertices"].push_back(net.name(v));
  j["shortfalls"] = Json::array();
  for (const Shortfall& s : w->shortfalls) {
    Json row;
    row["enterprise"] = net.name(s.enterprise);
    row["outside_inflow"] = to_string(s.outside_inflow);
    row["cost"] = to_string(s.cost);
    j["shortfalls"].push_back(std::move(row));
  }
  return j;
}

Json header(const char* command, const InvestmentNetwork& net) {
  Json j;
  j["report_version"] = kReportVersion;
  j["command"] = command;
  j["input_digest"] = "fnv1a64:" + fnv1a_hex(serialize_network(net));
  return j;
}

// Text output walks the JSON report so that the two never drift apart.
// "x_decimal" (or "decimal" next to "amount"/"total") is folded into x.
std::string scalar_text(const Json& value) {
  if (value.is_null()) return "none";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

const Json* decimal_for(const Json& object, const std::string& key) {
  if (auto it = object.find(key + "_decimal"); it != object.end()) return &*it;
  if (key == "amount" || key == "total") {
    if (auto it = object.find("decimal"); it != object.end()) return &*it;
  }
  return nullptr;
}

bool is_decimal_key(const std::string& key) {
  return key == "decimal" || (key.size() > 8 && key.ends_with("_decimal"));
}

std::string with_hint(const Json& object, const std::string& key, const Json& value) {
  std::string text = scalar_text(value);
  const Json* hint = decimal_for(object, key);
  if (hint && hint->is_string() && hint->get<std::string>() != text) {
    text += " (~" + hint->get<std::string>() + ")";
  }
  return text;
}

void render_text(const Json& object, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : object.items()) {
    if (is_decimal_key(key)) continue;
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(value, os, indent + 2);
    } else if (value.is_array()) {
      if (value.empty()) {
        os << pad << key << ": []\n";
      } else if (!value.front().is_object()) {
        os << pad << key << ":";
        for (const Json& item : value) os << ' ' << scalar_text(item);
        os << '\n';
      } else {
        os << pad << key << ":\n";
        for (const Json& item : value) {
          os << pad << "  -";
          for (const auto& [k, v] : item.items()) {
            if (is_decimal_key(k)) continue;
            os << ' ' << k << '=' << (v.is_array() || v.is_object() ? v.dump() : with_hint(item, k, v));
          }
          os << '\n';
        }
      }
    } else {
      os << pad << key << ": " << with_hint(object, key, value) << '\n';
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

// One row per scalar leaf: section,index,field,value.
void render_csv(const Json& report, std::ostream& os) {
  os << "section,index,field,value\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        const Json& item = value[i];
        if (item.is_object()) {
          for (const auto& [k, v] : item.items()) {
            os << csv_field(key) << ',' << i << ',' << csv_field(k) << ','
               << csv_field(v.is_array() || v.is_object() ? v.dump() : scalar_text(v)) << '\n';
          }
        } else {
          os << csv_field(key) << ',' << i << ",," << csv_field(scalar_text(item)) << '\n';
        }
      }
    } else if (value.is_object()) {
      for (const auto& [k, v] : value.items()) {
        os << csv_field(key) << ",," << csv_field(k) << ',' << csv_field(v.dump()) << '\n';
      }
    } else {
      os << "summary,," << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
    }
  }
}

void emit(const Context& ctx, const OutputOptions& options, const Json& report) {
  std::ostringstream buffer;
  switch (parse_format(options.format)) {
    case Format::kJson:
      buffer << report.dump(2) << '\n';
      break;
    case Format::kCsv:
      render_csv(report, buffer);
      break;
    case Format::kText:
      render_text(report, buffer, 0);
      break;
  }
  if (options.out_file.empty()) {
    ctx.out << buffer.str();
  } else {
    write_text_file(options.out_file, buffer.str());
  }
}

void emit_document(const Context& ctx, const std::string& out_file, const InvestmentNetwork& net) {
  const std::string text = serialize_network(net);
  if (out_file.empty()) {
    ctx.out << text;
  } else {
    write_text_file(out_file, text);
  }
}

InvestmentNetwork load_network(const std::string& path) {
  try {
    return parse_network(read_text_file(path));
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Json validation_json(const ValidationReport& report) {
  Json list = Json::array();
  for (const Violation& v : report.violations) list.push_back(v.message);
  return list;
}

int cmd_check(const Context& ctx, const std::string& path, const OutputOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const InvestmentNetwork net = load_network(path);
  Json report = header("check", net);
  const ValidationReport validation = validate_network(net);
  if (!validation.ok()) {
    report["status"] = "invalid";
    report["violations"] = validation_json(validation);
    report["timing_ms"] = elapsed_ms(start);
    emit(ctx, options, report);
    ctx.err << "collat: " << path << " violates " << validation.violations.size()
            << " model invariant(s)\n";
    return kExitError;
  }
  const SolvabilityReport solvability = solvability_check(net);
  report["status"] = solvability.solvable ? "solvable" : "infeasible";
  report["reduction"] = Json::array();
  for (const ReductionStep& step : solvability.steps) {
    Json row;
    row["enterprise"] = net.name(step.enterprise);
    row["spike_inflow"] = to_string(step.spike_inflow);
    report["reduction"].push_back(std::move(row));
  }
  report["witness"] = witness_json(net, solvability.witness);
  report["timing_ms"] = elapsed_ms(start);
  emit(ctx, options, report);
  return solvability.solvable ? kExitOk : kExitNegative;
}

int cmd_solve(const Context& ctx, const std::string& path, const std::string& method_text,
              unsigned jobs, const OutputOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const InvestmentNetwork net = load_network(path);
  const std::optional<Method> method = parse_method(method_text);
  if (!method) throw PreconditionError("unknown method '" + method_text + "'");
  if (*method == Method::kAuto) {
    const ValidationReport validation = validate_network(net);
    if (validation.ok()) {
      ctx.err << "collat: auto dispatch selected '" << method_name(dispatch_method(net)) << "'\n";
    }
  }
  SolverOptions solver_options;
  solver_options.jobs = std::max(jobs, 1u);
  const Solution solution = solve(net, *method, solver_options);
  const bool solved = solution.status == SolveStatus::kSolved;

  Json report = header("solve", net);
  report["method"] = std::string(method_name(solution.method));
  report["status"] = solved ? "solved" : "infeasible";
  report["total"] = solved ? to_string(solution.total) : "infinite";
  if (solved) report["total_decimal"] = decimal_hint(solution.total);
  report["collaterals"] = solved ? collaterals_to_json(net, solution.collateral) : Json::array();
  report["order"] = Json::array();
  for (EdgeId e : solution.order) report["order"].push_back(edge_name(net, e));
  report["star_optima"] = Json::array();
  for (const StarTotal& s : solution.star_totals) {
    Json row;
    row["enterprise"] = net.name(s.enterprise);
    row["total"] = to_string(s.total);
    row["decimal"] = decimal_hint(s.total);
    report["star_optima"].push_back(std::move(row));
  }
  report["star_sum"] = to_string(solution.star_sum);
  if (!solved) {
    report["nec"] = "undefined";
  } else if (solution.nec) {
    report["nec"] = to_string(*solution.nec);
    report["nec_decimal"] = decimal_hint(*solution.nec);
  } else {
    report["nec"] = "infinite";
  }
  report["witness"] = witness_json(net, solution.witness);
  report["timing_ms"] = elapsed_ms(start);
  emit(ctx, options, report);
  return solved ? kExitOk : kExitNegative;
}

int cmd_verify(const Context& ctx, const std::string& path, const std::string& collateral_path,
               const OutputOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const InvestmentNetwork net = load_network(path);
  CollateralMatrix c;
  try {
    c = parse_collaterals(net, read_text_file(collateral_path));
  } catch (const DocumentError& e) {
    throw DocumentError(collateral_path + ": " + e.what());
  }
  const EliminationResult closure = iterated_elimination(net, c);
  const bool viable = closure.all_resolved();

  Json report = header("verify", net);
  report["status"] = viable ? "viable" : "not_viable";
  report["total"] = to_string(c.total());
  report["total_decimal"] = decimal_hint(c.total());
  report["order"] = Json::array();
  for (EdgeId e : closure.resolved) report["order"].push_back(edge_name(net, e));
  report["stuck"] = Json::array();
  for (EdgeId e : closure.stuck.elements()) report["stuck"].push_back(edge_name(net, e));
  if (viable) {
    Json reducible = Json::array();
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
      const std::optional<Money> least = minimal_coordinate(net, c, e);
      if (least && *least < c[e]) {
        Json row = edge_json(net, e);
        row["amount"] = to_string(c[e]);
        row["minimum"] = to_string(*least);
        reducible.push_back(std::move(row));
      }
    }
    report["minimal"] = reducible.empty();
    report["reducible"] = std::move(reducible);
  }
  report["timing_ms"] = elapsed_ms(start);
  emit(ctx, options, report);
  return viable ? kExitOk : kExitNegative;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("expected a comma-separated list of integers, got '" + text + "'");
    }
    out.push_back(value);
  }
  return out;
}

DirectedGraph parse_arcs(std::size_t n, const std::string& text) {
  DirectedGraph g;
  g.num_vertices = n;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw std::invalid_argument("arc '" + item + "' is not of the form u>v");
    const std::vector<std::int64_t> u = parse_int_list(item.substr(0, gt));
    const std::vector<std::int64_t> v = parse_int_list(item.substr(gt + 1));
    if (u.size() != 1 || v.size() != 1 || u[0] < 0 || v[0] < 0 ||
        static_cast<std::size_t>(u[0]) >= n || static_cast<std::size_t>(v[0]) >= n) {
      throw std::invalid_argument("arc '" + item + "' needs endpoints in [0, " + std::to_string(n) + ")");
    }
    g.arcs.emplace_back(static_cast<std::size_t>(u[0]), static_cast<std::size_t>(v[0]));
  }
  return g;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("COLLAT_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Minimal collaterals for networked investment games"};
  app.name("collat");
  app.require_subcommand(1);

  OutputOptions output;
  auto add_output = [&](CLI::App* sub, bool csv) {
    sub->add_option("--out", output.format, "Report format")
        ->check(CLI::IsMember(csv ? std::vector<std::string>{"text", "json", "csv"}
                                  : std::vector<std::string>{"text", "json"}));
    sub->add_option("--out-file", output.out_file, "Write the report here instead of stdout");
  };

  std::string path;
  std::string collateral_path;
  CLI::App* check = app.add_subcommand("check", "Validate a network and decide solvability");
  check->add_option("file", path, "Network document")->required();
  add_output(check, false);

  std::string method = "auto";
  unsigned jobs = default_jobs();
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute a minimum-total viable collateral matrix");
  solve_cmd->add_option("file", path, "Network document")->required();
  solve_cmd->add_option("--method", method, "Solver")
      ->check(CLI::IsMember({"auto", "star", "dag", "exact", "large-alpha"}));
  solve_cmd->add_option("--jobs", jobs, "Worker threads (env COLLAT_JOBS)")
      ->check(CLI::Range(1u, 1024u));
  add_output(solve_cmd, true);

  CLI::App* verify = app.add_subcommand("verify", "Check a collateral matrix for viability and minimality");
  verify->add_option("file", path, "Network document")->required();
  verify->add_option("collaterals", collateral_path, "Collateral document")->required();
  add_output(verify, false);

  CLI::App* gen = app.add_subcommand("gen", "Write a generated network document");
  gen->require_subcommand(1);
  std::string gen_out;
  int k = 7;
  CLI::App* gen_cycle = gen->add_subcommand("cycle", "Three-enterprise cycle family");
  gen_cycle->add_option("--k", k, "Spike weight, k >= 3");
  RandomProfile profile;
  CLI::App* gen_random = gen->add_subcommand("random", "Seeded random network");
  gen_random->add_option("--n", profile.num_vertices, "Vertices");
  gen_random->add_option("--d", profile.max_out_degree, "Maximum out-degree");
  gen_random->add_flag("--acyclic", profile.acyclic, "No directed cycles");
  gen_random->add_flag("--large-alpha", profile.large_alpha, "Integer inputs with alpha > Z");
  gen_random->add_option("--wmin", profile.weight_min, "Smallest edge amount");
  gen_random->add_option("--wmax", profile.weight_max, "Largest edge amount");
  gen_random->add_option("--seed", profile.seed, "Random seed");
  std::string xs_text;
  std::int64_t t = 0;
  CLI::App* gen_knapsack = gen->add_subcommand("knapsack", "Star encoding inverse knapsack");
  gen_knapsack->add_option("--xs", xs_text, "Item sizes, comma separated")->required();
  gen_knapsack->add_option("--t", t, "Threshold")->required();
  std::size_t fvs_n = 0;
  std::string arcs_text;
  CLI::App* gen_fvs = gen->add_subcommand("fvs", "Feedback vertex set gadget");
  gen_fvs->add_option("--n", fvs_n, "Vertices of the directed graph")->required();
  gen_fvs->add_option("--arcs", arcs_text, "Arcs as u>v, comma separated");
  for (CLI::App* sub : {gen_cycle, gen_random, gen_knapsack, gen_fvs}) {
    sub->add_option("--out-file", gen_out, "Write the document here instead of stdout");
  }

  std::vector<const char*> argv{"collat"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "collat: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(ctx, path, output);
    if (solve_cmd->parsed()) return cmd_solve(ctx, path, method, jobs, output);
    if (verify->parsed()) return cmd_verify(ctx, path, collateral_path, output);
    if (gen_cycle->parsed()) {
      emit_document(ctx, gen_out, gen_cycle_family(k));
    } else if (gen_random->parsed()) {
      emit_document(ctx, gen_out, random_network(profile));
    } else if (gen_knapsack->parsed()) {
      const std::vector<std::int64_t> xs = parse_int_list(xs_text);
      InvestmentNetwork net = star_network(gen_knapsack_star(xs, t));
      net.meta()["generator"] = "knapsack";
      net.meta()["xs"] = xs_text;
      net.meta()["t"] = std::to_string(t);
      emit_document(ctx, gen_out, net);
    } else if (gen_fvs->parsed()) {
      emit_document(ctx, gen_out, gen_fvs_gadget(parse_arcs(fvs_n, arcs_text)));
    }
    return kExitOk;
  } catch (const TooLargeError& e) {
    err << "collat: too large: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "collat: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace collat
