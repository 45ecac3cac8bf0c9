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

#include "parity/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace parity {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string indices_json(const QubitLabel& q) {
  std::string out = "[";
  for (size_t k = 0; k < q.size(); k++) {
    if (k) out += ", ";
    out += std::to_string(q.indices()[k]);
  }
  return out + "]";
}

QubitLabel label_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("qubit label must be an array of indices");
  std::vector<int> idx;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("qubit label entries must be integers");
    idx.push_back(v.get<int>());
  }
  try {
    return QubitLabel(std::move(idx));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

size_t ref_from_json(const json& j, size_t limit, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      static_cast<size_t>(j.get<long long>()) >= limit) {
    throw FormatError(std::string(what) + " reference out of range");
  }
  return j.get<size_t>();
}

}  // namespace

std::string circuit_to_json(const Circuit& circuit) {
  std::string out = "{\n  \"version\": 1,\n  \"space\": \"";
  out += circuit.space() == Space::kLogical ? "logical" : "physical";
  out += "\",\n  \"register\": [";
  for (size_t k = 0; k < circuit.num_qubits(); k++) {
    if (k) out += ", ";
    out += indices_json(circuit.qubits()[k]);
  }
  out += "],\n";
  if (circuit.global_phase() != 0) {
    out += "  \"global_phase\": " + format_double(circuit.global_phase()) + ",\n";
  }
  out += "  \"gates\": [";
  for (size_t k = 0; k < circuit.size(); k++) {
    const Gate& g = circuit.gates()[k];
    out += k ? ",\n    " : "\n    ";
    out += "{\"kind\": \"" + std::string(gate_name(g.kind)) + "\", \"qubits\": [" +
           std::to_string(g.q0);
    if (g.two_qubit()) out += ", " + std::to_string(g.q1);
    out += "]";
    if (has_angle(g.kind)) out += ", \"angle\": " + format_double(g.angle);
    out += "}";
  }
  out += circuit.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Circuit circuit_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object()) throw FormatError("circuit must be a JSON object");
  if (!j.contains("version") || j["version"] != 1) throw FormatError("unsupported circuit version");
  std::string space = j.value("space", "");
  if (space != "logical" && space != "physical") {
    throw FormatError("space must be \"logical\" or \"physical\"");
  }
  if (!j.contains("register") || !j["register"].is_array()) throw FormatError("missing register");
  std::vector<QubitLabel> reg;
  for (const auto& q : j["register"]) reg.push_back(label_from_json(q));
  Circuit c = [&] {
    try {
      return Circuit(space == "logical" ? Space::kLogical : Space::kPhysical, reg);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }();
  if (j.contains("global_phase")) {
    if (!j["global_phase"].is_number()) throw FormatError("global_phase must be a number");
    c.set_global_phase(j["global_phase"].get<double>());
  }
  if (!j.contains("gates") || !j["gates"].is_array()) throw FormatError("missing gates");
  for (const auto& g : j["gates"]) {
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string()) {
      throw FormatError("gate needs a kind");
    }
    GateKind kind;
    try {
      kind = gate_kind_from_name(g["kind"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (!g.contains("qubits") || !g["qubits"].is_array()) throw FormatError("gate needs qubits");
    const auto& qs = g["qubits"];
    size_t arity = is_two_qubit(kind) ? 2 : 1;
    if (qs.size() != arity) throw FormatError(std::string(gate_name(kind)) + " has wrong arity");
    double angle = 0;
    if (has_angle(kind)) {
      if (!g.contains("angle") || !g["angle"].is_number()) {
        throw FormatError(std::string(gate_name(kind)) + " needs an angle");
      }
      angle = g["angle"].get<double>();
      if (!std::isfinite(angle)) throw FormatError("angle must be finite");
    }
    uint32_t q0 = static_cast<uint32_t>(ref_from_json(qs[0], reg.size(), "qubit"));
    uint32_t q1 = arity == 2 ? static_cast<uint32_t>(ref_from_json(qs[1], reg.size(), "qubit")) : q0;
    try {
      c.add(Gate{kind, q0, q1, angle});
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  return c;
}

std::string layout_to_json(const ParityLayout& layout) {
  json j;
  j["n"] = layout.n_logical();
  json qubits = json::array();
  for (const auto& q : layout.qubits()) qubits.push_back(q.indices());
  j["qubits"] = qubits;
  json pos = json::array();
  for (auto p : layout.positions()) pos.push_back({p.x, p.y});
  j["positions"] = pos;
  json cons = json::array();
  for (const auto& c : layout.constraints()) {
    json refs = json::array();
    for (const auto& m : c.members) refs.push_back(layout.index_of(m));
    cons.push_back(refs);
  }
  j["constraints"] = cons;
  json lines = json::array();
  for (const auto& line : layout.lines()) {
    json refs = json::array();
    for (const auto& m : line) refs.push_back(layout.index_of(m));
    lines.push_back(refs);
  }
  j["lines"] = lines;
  return j.dump(1) + "\n";
}

ParityLayout layout_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object()) throw FormatError("layout must be a JSON object");
  for (const char* key : {"n", "qubits", "positions", "constraints", "lines"}) {
    if (!j.contains(key)) throw FormatError(std::string("layout is missing \"") + key + "\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) throw FormatError("bad n");
  std::vector<QubitLabel> qubits;
  for (const auto& q : j["qubits"]) qubits.push_back(label_from_json(q));
  std::vector<GridPos> positions;
  for (const auto& p : j["positions"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw FormatError("positions must be [x, y] integer pairs");
    }
    positions.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  std::vector<Constraint> constraints;
  for (const auto& c : j["constraints"]) {
    Constraint con;
    for (const auto& r : c) con.members.push_back(qubits[ref_from_json(r, qubits.size(), "constraint")]);
    constraints.push_back(std::move(con));
  }
  std::vector<std::vector<QubitLabel>> lines;
  for (const auto& l : j["lines"]) {
    std::vector<QubitLabel> line;
    for (const auto& r : l) line.push_back(qubits[ref_from_json(r, qubits.size(), "line")]);
    lines.push_back(std::move(line));
  }
  return ParityLayout(j["n"].get<int>(), std::move(qubits), std::move(positions),
                      std::move(constraints), std::move(lines));
}

std::string render_layout(const ParityLayout& layout) {
  if (layout.num_qubits() == 0) return "";
  int x0 = INT32_MAX, x1 = INT32_MIN, y0 = INT32_MAX, y1 = INT32_MIN;
  size_t width = 1;
  std::map<GridPos, std::string> cell;
  for (size_t k = 0; k < layout.num_qubits() && k < layout.positions().size(); k++) {
    GridPos p = layout.positions()[k];
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
    std::string s = layout.qubits()[k].str();
    width = std::max(width, s.size());
    cell[p] = std::move(s);
  }
  std::ostringstream out;
  for (int y = y1; y >= y0; y--) {
    std::string row;
    for (int x = x0; x <= x1; x++) {
      auto it = cell.find({x, y});
      std::string s = it == cell.end() ? "." : it->second;
      s.resize(width + 1, ' ');
      row += s;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace parity
