// Copyright 2026 The Parity Compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// parityc: compile, verify and report on parity-encoded circuits.
//
// Exit codes: 0 success, 1 verification or generation failure, 2 usage,
// 3 simulator resource cap.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parity/algorithms.hpp"
#include "parity/io.hpp"
#include "parity/layouts.hpp"
#include "parity/scheduler.hpp"
#include "parity/simulator.hpp"
#include "parity/synth.hpp"

using namespace parity;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompileOptions {
  std::string kind;
  int n = 0;
  int controls = 0;
  std::string out, layout_out, logical_out;
  std::string passes = "on";
  bool schedule = false;
  bool r2_internal = true;
  std::string edges;
  bool decode = false;
  uint64_t seed = 0;
  double beta = 0.4, gamma = 0.3;
  int layers = 1;
  std::string layout_in, circuit_in;
  std::string format = "md";
};

struct VerifyOptions {
  std::string circuit, layout, logical;
  uint64_t seed = 0;
  int random_states = 2;
};

struct ReportOptions {
  std::string kind;
  std::string range;
  std::string format = "md";
};

std::string read_input(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t dash = item.find_first_of("-:");
    if (dash == std::string::npos) throw UsageError("edge '" + item + "' must look like a-b");
    try {
      edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw UsageError("edge '" + item + "' must look like a-b");
    }
  }
  return edges;
}

// "3..8" or "5". An empty range (hi < lo) is allowed.
std::pair<int, int> parse_range(const std::string& text) {
  try {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range '" + text + "' must look like 3..8");
  }
}

std::string with_layers(const Circuit& c) {
  std::string text = circuit_to_json(c);
  ScheduledCircuit s = schedule(c);
  text.erase(text.rfind('}'));
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
  text += ",\n  \"layers\": " + nlohmann::json(s.layers).dump() + "\n}\n";
  return text;
}

void print_stats(const ResourceStats& s, const std::string& format) {
  if (format == "json") {
    std::cout << stats_json(s).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "qubits,cnot,cp,single_qubit,total_gates,depth\n"
              << s.qubit_count << "," << s.cnot_count << "," << s.cp_count << "," << s.single_qubit_count << ","
              << s.total_gates << "," << s.depth << "\n";
  } else {
    std::cout << stats_table(s);
  }
}

int run_compile(const CompileOptions& o) {
  if (o.passes != "on" && o.passes != "off") throw UsageError("--passes takes on or off");
  std::optional<ParityLayout> layout;
  std::optional<Circuit> physical, logical;
  std::optional<ResourceStats> core;

  auto need_n = [&](int lo) {
    if (o.n < lo) throw UsageError("--n must be at least " + std::to_string(lo) + " for " + o.kind);
  };

  if (o.kind == "qft") {
    need_n(2);
    Compiled c = qft_parity(o.n);
    layout = c.layout;
    physical = o.passes == "on" ? c.circuit : compile_logical(qft_logical(o.n), c.layout);
    logical = qft_logical(o.n);
  } else if (o.kind == "add") {
    need_n(1);
    Compiled step = draper_core_step(o.n, o.r2_internal);
    core = resource_stats(step.circuit);
    if (o.r2_internal || o.n == 1) {
      Compiled c = draper_addition(o.n, o.r2_internal);
      layout = c.layout;
      physical = o.passes == "on" ? c.circuit : compile_logical(draper_addition_logical(o.n), c.layout);
      logical = draper_addition_logical(o.n);
    } else {
      std::cerr << "note: without the register-internal block only the core step is compiled\n";
      layout = step.layout;
      physical = o.passes == "on" ? step.circuit : compile_logical(draper_core_logical(o.n), step.layout);
      logical = draper_core_logical(o.n);
    }
  } else if (o.kind == "grover") {
    if (o.controls < 2) throw UsageError("--controls must be at least 2 for grover");
    Compiled c = grover_diffusion(o.controls + 1);
    layout = c.layout;
    physical = c.circuit;
    logical = grover_diffusion_logical(o.controls + 1);
  } else if (o.kind == "qaoa") {
    need_n(2);
    if (o.layers < 1) throw UsageError("--p must be at least 1");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coupling(-1, 1);
    IsingModel model{o.n, {}};
    for (int i = 0; i < o.n; i++) model.terms.push_back({{i}, coupling(rng)});
    for (int i = 0; i < o.n; i++)
      for (int j = i + 1; j < o.n; j++) model.terms.push_back({{i, j}, coupling(rng)});
    QaoaParams params{std::vector<double>(static_cast<size_t>(o.layers), o.beta),
                      std::vector<double>(static_cast<size_t>(o.layers), o.gamma)};
    layout = lhz_layout(o.n);
    physical = qaoa_step(model, params, *layout);
    logical = qaoa_logical_circuit(model, params);
    std::cout << "driver depth " << resource_stats(apply_passes(qaoa_driver(*layout, o.beta))).depth << "\n";
  } else if (o.kind == "graphstate") {
    need_n(1);
    Graph g{o.n, parse_edges(o.edges)};
    try {
      validate_graph(g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Compiled c = graph_state_prep(g, o.decode);
    layout = c.layout;
    physical = c.circuit;
  } else if (o.kind == "custom") {
    if (o.layout_in.empty() || o.circuit_in.empty()) throw UsageError("custom needs --layout and --circuit");
    layout = layout_from_json(read_input(o.layout_in));
    auto violations = validate_layout(*layout);
    if (!violations.empty()) {
      std::string msg = "invalid layout:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw std::invalid_argument(msg);
    }
    logical = circuit_from_json(read_input(o.circuit_in));
    if (logical->space() != Space::kLogical) throw UsageError("--circuit must hold a logical circuit");
    physical = compile_logical(*logical, *layout);
    if (o.passes == "on") physical = apply_passes(*physical);
  } else {
    throw UsageError("unknown compile target '" + o.kind + "'");
  }

  if (!o.out.empty()) write_file(o.out, o.schedule ? with_layers(*physical) : circuit_to_json(*physical));
  if (!o.layout_out.empty()) write_file(o.layout_out, layout_to_json(*layout));
  if (!o.logical_out.empty()) {
    if (!logical) throw UsageError("no logical reference circuit exists for " + o.kind);
    write_file(o.logical_out, circuit_to_json(*logical));
  }
  print_stats(resource_stats(*physical), o.format);
  if (core) {
    std::cout << "core step: qubits " << core->qubit_count << ", depth(core) " << core->depth << ", CNOT "
              << core->cnot_count << ", single-qubit " << core->single_qubit_count << "\n";
  }
  return 0;
}

int run_verify(const VerifyOptions& o) {
  Circuit physical = circuit_from_json(read_input(o.circuit));
  ParityLayout layout = layout_from_json(read_input(o.layout));
  Circuit logical = circuit_from_json(read_input(o.logical));
  EquivalenceResult r = verify_equivalence(logical, physical, layout, {o.seed, o.random_states});
  std::printf("fidelity %.15f\nstabilizer deviation %.3e\n", r.fidelity, r.stabilizer_deviation);
  bool ok = r.fidelity >= 1 - 1e-10 && r.stabilizer_deviation < 1e-10;
  std::printf("%s\n", ok ? "equivalent" : "NOT equivalent");
  return ok ? 0 : kExitFailure;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) {
  char buf[32];
  if (v == std::floor(v)) std::snprintf(buf, sizeof(buf), "%.0f", v);
  else std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void print_table(const Table& t, const std::string& format, const std::string& note) {
  if (format == "csv") {
    for (size_t k = 0; k < t.header.size(); k++) std::cout << (k ? "," : "") << t.header[k];
    std::cout << "\n";
    for (const auto& r : t.rows) {
      for (size_t k = 0; k < r.size(); k++) std::cout << (k ? "," : "") << r[k];
      std::cout << "\n";
    }
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
      nlohmann::json row;
      for (size_t k = 0; k < r.size(); k++) row[t.header[k]] = std::stod(r[k]);
      rows.push_back(row);
    }
    std::cout << nlohmann::json{{"rows", rows}, {"note", note}}.dump(2) << "\n";
  } else {
    std::string line = "|", sep = "|";
    for (const auto& h : t.header) {
      line += " " + h + " |";
      sep += std::string(h.size() + 2, '-') + "|";
    }
    std::cout << line << "\n" << sep << "\n";
    for (const auto& r : t.rows) {
      std::string row = "|";
      for (size_t k = 0; k < r.size(); k++) {
        std::string cell = r[k];
        if (cell.size() < t.header[k].size()) cell.insert(0, t.header[k].size() - cell.size(), ' ');
        row += " " + cell + " |";
      }
      std::cout << row << "\n";
    }
    std::cout << "\n" << note << "\n";
  }
}

int run_report(const ReportOptions& o) {
  auto [lo, hi] = parse_range(o.range);
  Table t;
  std::string note;
  if (o.kind == "qft") {
    if (lo <= hi && lo < 2) throw UsageError("qft report needs n >= 2");
    t.header = {"n", "qubits", "cnot", "single_qubit", "total", "depth", "a2a_cnot", "a2a_single", "a2a_total",
                "a2a_depth", "sq_cnot", "sq_single", "sq_total", "sq_depth"};
    for (int n = lo; n <= hi; n++) {
      ResourceStats s = resource_stats(qft_parity(n).circuit);
      double d = n;
      t.rows.push_back({fmt(d), fmt(s.qubit_count), fmt(s.cnot_count), fmt(s.single_qubit_count),
                        fmt(s.total_gates), fmt(s.depth), fmt(d * (d - 1)), fmt(d * d), fmt(d * (2 * d - 1)),
                        fmt(8 * d - 10), fmt(3 * d * (d - 1) / 2), fmt(d * d), fmt(d * (5 * d - 3) / 2),
                        fmt(10 * d - 13)});
    }
    note = "a2a_* (all-to-all) and sq_* (square lattice) are cited reference values, not compiled here.";
  } else if (o.kind == "add") {
    if (lo <= hi && lo < 1) throw UsageError("add report needs n >= 1");
    t.header = {"n", "qubits", "cnot", "single_qubit", "total", "depth", "a2a_qubits", "a2a_cnot", "a2a_single",
                "a2a_total", "a2a_depth"};
    for (int n = lo; n <= hi; n++) {
      ResourceStats s = resource_stats(draper_core_step(n, false).circuit);
      double d = n;
      t.rows.push_back({fmt(d), fmt(s.qubit_count), fmt(s.cnot_count), fmt(s.single_qubit_count),
                        fmt(s.total_gates), fmt(s.depth), fmt(2 * d), fmt(d * (d + 1)), fmt(d * (d + 5) / 2),
                        fmt(d * (3 * d + 7) / 2), fmt(3 * std::log2(d) + 1)});
    }
    note = "Core addition step only. a2a_* (all-to-all) columns are cited reference values, not compiled here.";
  } else {
    throw UsageError("unknown report '" + o.kind + "' (expected qft or add)");
  }
  print_table(t, o.format, note);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile, verify and report on parity-encoded quantum circuits"};
  app.require_subcommand(1);

  CompileOptions co;
  CLI::App* compile = app.add_subcommand("compile", "Compile a circuit family onto its parity layout");
  compile->add_option("kind", co.kind, "qft, add, grover, qaoa, graphstate or custom")
      ->required()
      ->check(CLI::IsMember({"qft", "add", "grover", "qaoa", "graphstate", "custom"}));
  compile->add_option("--n", co.n, "Number of logical qubits (per register for add)");
  compile->add_option("--out", co.out, "Physical circuit JSON output");
  compile->add_option("--layout-out", co.layout_out, "Layout JSON output");
  compile->add_option("--logical-out", co.logical_out, "Logical reference circuit JSON output");
  compile->add_option("--passes", co.passes, "Cancellation and merge passes: on or off");
  compile->add_flag("--schedule", co.schedule, "Add the layer assignment to the circuit JSON");
  compile->add_option("--r2-internal", co.r2_internal, "add: include the first register's internal block");
  compile->add_option("--controls", co.controls, "grover: number of controls m");
  compile->add_option("--edges", co.edges, "graphstate: edges as 0-1,1-2,...");
  compile->add_flag("--decode", co.decode, "graphstate: append the decoding circuit");
  compile->add_option("--seed", co.seed, "qaoa: seed for random couplings");
  compile->add_option("--beta", co.beta, "qaoa: driver angle");
  compile->add_option("--gamma", co.gamma, "qaoa: problem angle");
  compile->add_option("--p", co.layers, "qaoa: number of layers");
  compile->add_option("--layout", co.layout_in, "custom: layout JSON");
  compile->add_option("--circuit", co.circuit_in, "custom: logical circuit JSON");
  compile->add_option("--format", co.format, "Stats format")->check(CLI::IsMember({"md", "csv", "json"}));

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "Check a physical circuit against a logical one");
  verify->add_option("--circuit", vo.circuit, "Physical circuit JSON")->required();
  verify->add_option("--layout", vo.layout, "Layout JSON")->required();
  verify->add_option("--logical", vo.logical, "Logical circuit JSON")->required();
  verify->add_option("--seed", vo.seed, "Seed for random test states");
  verify->add_option("--random-states", vo.random_states, "Number of random superpositions");

  ReportOptions ro;
  CLI::App* report = app.add_subcommand("report", "Resource tables over a range of n");
  report->add_option("kind", ro.kind, "qft or add")->required()->check(CLI::IsMember({"qft", "add"}));
  report->add_option("--n", ro.range, "Range such as 3..8")->required();
  report->add_option("--format", ro.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compile) return run_compile(co);
    if (*verify) return run_verify(vo);
    return run_report(ro);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
