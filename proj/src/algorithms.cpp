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

#include "parity/algorithms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parity/layouts.hpp"
#include "parity/scheduler.hpp"
#include "parity/synth.hpp"

namespace parity {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> descending(int n) {
  std::vector<int> v = iota(n);
  std::reverse(v.begin(), v.end());
  return v;
}

double cr_angle(int k) { return 2 * kPi / std::ldexp(1.0, k); }

void append_logical(Circuit& out, const Circuit& part) {
  for (const Gate& g : part.gates()) {
    Gate mapped = g;
    mapped.q0 = static_cast<uint32_t>(out.index_of(part.qubits()[g.q0]));
    mapped.q1 = static_cast<uint32_t>(out.index_of(part.qubits()[g.q1]));
    out.add(mapped);
  }
  out.add_global_phase(part.global_phase());
}

// Logical CCZ from controlled phases and CNOTs on three qubits.
void logical_ccz(Circuit& c, int i, int j, int k) {
  QubitLabel a{i}, b{j}, t{k};
  c.cp(b, t, kPi / 2);
  c.cnot(a, b);
  c.cp(b, t, -kPi / 2);
  c.cnot(a, b);
  c.cp(a, t, kPi / 2);
}

void logical_toffoli(Circuit& c, int i, int j, int k) {
  c.h(QubitLabel{k});
  logical_ccz(c, i, j, k);
  c.h(QubitLabel{k});
}

// (control-with-data-role, other control, target) for each ladder Toffoli.
std::vector<std::array<int, 3>> ladder(int m) {
  const GroverIndices g = grover_indices(m);
  std::vector<std::array<int, 3>> steps{{g.controls[0], g.controls[1], g.ancillas[0]}};
  for (int k = 2; k <= m - 1; k++) {
    steps.push_back({g.controls[k], g.ancillas[k - 2], g.ancillas[k - 1]});
  }
  return steps;
}

}  // namespace

Circuit qft_logical(int n, const std::vector<int>& order) {
  if (n < 1) throw std::invalid_argument("QFT needs n >= 1");
  Circuit c = Circuit::logical(n);
  for (size_t i = 0; i < order.size(); i++) {
    c.h(QubitLabel{order[i]});
    for (size_t j = i + 1; j < order.size(); j++) {
      c.cp(QubitLabel{order[i]}, QubitLabel{order[j]}, cr_angle(static_cast<int>(j - i + 1)));
    }
  }
  return c;
}

Circuit qft_logical(int n) { return qft_logical(n, iota(n)); }

Circuit inverse_qft_logical(int n, const std::vector<int>& order) {
  Circuit c = Circuit::logical(n);
  for (size_t i = order.size(); i-- > 0;) {
    for (size_t j = order.size(); j-- > i + 1;) {
      c.cp(QubitLabel{order[i]}, QubitLabel{order[j]}, -cr_angle(static_cast<int>(j - i + 1)));
    }
    c.h(QubitLabel{order[i]});
  }
  return c;
}

Compiled qft_parity(int n) {
  if (n < 2) throw std::invalid_argument("parity QFT needs n >= 2");
  ParityLayout layout = lhz_layout(n);
  Circuit c = apply_passes(compile_logical(qft_logical(n), layout));
  return {std::move(layout), std::move(c)};
}

Circuit draper_core_logical(int n) {
  if (n < 1) throw std::invalid_argument("addition needs n >= 1");
  Circuit c = Circuit::logical(2 * n);
  for (int p = 0; p < n; p++) {
    for (int j = 0; j <= p; j++) c.cp(QubitLabel{p}, QubitLabel{n + j}, cr_angle(p - j + 1));
  }
  return c;
}

Circuit draper_addition_logical(int n) {
  Circuit c = Circuit::logical(2 * n);
  Circuit qft = qft_logical(n, descending(n));
  Circuit iqft = inverse_qft_logical(n, descending(n));
  append_logical(c, qft);
  append_logical(c, draper_core_logical(n));
  append_logical(c, iqft);
  return c;
}

Compiled draper_core_step(int n, bool register_internal) {
  ParityLayout layout = addition_layout(n, register_internal);
  Circuit c = apply_passes(compile_logical(draper_core_logical(n), layout));
  return {std::move(layout), std::move(c)};
}

Compiled draper_addition(int n, bool register_internal) {
  if (n >= 2 && !register_internal) {
    throw std::invalid_argument(
        "the Fourier transform on the first register needs its internal parity qubits; "
        "use the layout with the register-internal block or compile the core step only");
  }
  ParityLayout layout = addition_layout(n, register_internal);
  Circuit c = apply_passes(compile_logical(draper_addition_logical(n), layout));
  return {std::move(layout), std::move(c)};
}

LogicalOp addition_op(int n) {
  return [n](const StateVector& in) {
    StateVector out(in.qubits());
    const uint64_t mask = (uint64_t{1} << n) - 1;
    for (uint64_t idx = 0; idx < in.amplitudes().size(); idx++) {
      uint64_t a = idx & mask, b = (idx >> n) & mask;
      uint64_t s = (a + b) & mask;
      out.amplitudes()[(b << n) | s] = in.amplitudes()[idx];
    }
    return out;
  };
}

Circuit multi_controlled_phase_logical(int m, double phi) {
  const GroverIndices g = grover_indices(m);
  Circuit c = Circuit::logical(2 * m);
  const auto steps = ladder(m);
  for (const auto& [a, b, t] : steps) logical_toffoli(c, a, b, t);
  c.cp(QubitLabel{g.ancillas.back()}, QubitLabel{g.target}, phi);
  for (size_t s = steps.size(); s-- > 0;) logical_toffoli(c, steps[s][0], steps[s][1], steps[s][2]);
  return c;
}

Compiled multi_controlled_phase(int m, double phi) {
  const GroverIndices g = grover_indices(m);
  ParityLayout layout = grover_layout(m);
  Circuit c = layout_circuit(layout);
  const auto steps = ladder(m);
  for (const auto& [a, b, t] : steps) c.append(synth_toffoli(layout, a, b, t));
  c.append(synth_cphase(layout, g.ancillas.back(), g.target, phi));
  for (size_t s = steps.size(); s-- > 0;) {
    c.append(synth_toffoli(layout, steps[s][0], steps[s][1], steps[s][2]));
  }
  c = apply_passes(c);
  return {std::move(layout), std::move(c)};
}

Circuit grover_diffusion_logical(int n_total) {
  if (n_total < 3) throw std::invalid_argument("diffusion needs n_total >= 3");
  const int m = n_total - 1;
  Circuit c = Circuit::logical(2 * m);
  for (int q = 0; q <= m; q++) c.h(QubitLabel{q});
  for (int q = 0; q <= m; q++) c.x(QubitLabel{q});
  append_logical(c, multi_controlled_phase_logical(m, kPi));
  for (int q = 0; q <= m; q++) c.x(QubitLabel{q});
  for (int q = 0; q <= m; q++) c.h(QubitLabel{q});
  return c;
}

Compiled grover_diffusion(int n_total) {
  if (n_total < 3) throw std::invalid_argument("diffusion needs n_total >= 3");
  const int m = n_total - 1;
  Compiled mcp = multi_controlled_phase(m, kPi);
  Circuit c = layout_circuit(mcp.layout);
  for (int q = 0; q <= m; q++) c.append(synth_hadamard(mcp.layout, q));
  for (int q = 0; q <= m; q++) c.append(synth_x(mcp.layout, q));
  c.append(mcp.circuit);
  for (int q = 0; q <= m; q++) c.append(synth_x(mcp.layout, q));
  for (int q = 0; q <= m; q++) c.append(synth_hadamard(mcp.layout, q));
  c = apply_passes(c);
  return {std::move(mcp.layout), std::move(c)};
}

Circuit qaoa_driver(const ParityLayout& layout, double beta) {
  Circuit c = layout_circuit(layout);
  for (int i = 0; i < layout.n_logical(); i++) {
    c.append(synth_rx(layout, i, 2 * beta, QubitLabel{i}));
  }
  return c;
}

Circuit qaoa_step(const IsingModel& model, const QaoaParams& params, const ParityLayout& layout) {
  if (params.betas.size() != params.gammas.size() || params.betas.empty()) {
    throw std::invalid_argument("QAOA needs equally many betas and gammas, at least one each");
  }
  std::string missing;
  for (const auto& [indices, J] : model.terms) {
    QubitLabel q(indices);
    if (!layout.contains(q)) missing += (missing.empty() ? "" : ", ") + q.str();
  }
  if (!missing.empty()) throw std::invalid_argument("no layout qubit for terms " + missing);

  Circuit c = layout_circuit(layout);
  for (size_t p = 0; p < params.betas.size(); p++) {
    for (const auto& [indices, J] : model.terms) {
      double angle = canonical_angle(2 * params.gammas[p] * J);
      if (angle != 0) c.rz(QubitLabel(indices), angle);
    }
    if (canonical_angle(2 * params.betas[p]) != 0) c.append(qaoa_driver(layout, params.betas[p]));
  }
  return apply_passes(c);
}

LogicalOp qaoa_logical(const IsingModel& model, const QaoaParams& params) {
  return [model, params](const StateVector& in) {
    StateVector s = in;
    auto& amps = s.amplitudes();
    for (size_t p = 0; p < params.betas.size(); p++) {
      for (uint64_t idx = 0; idx < amps.size(); idx++) {
        double energy = 0;
        for (const auto& [indices, J] : model.terms) {
          int parity = 0;
          for (int i : indices) parity ^= static_cast<int>((idx >> i) & 1);
          energy += parity ? -J : J;
        }
        amps[idx] *= std::polar(1.0, -params.gammas[p] * energy);
      }
      Circuit driver = Circuit::logical(model.n);
      for (int i = 0; i < model.n; i++) driver.rx(QubitLabel{i}, 2 * params.betas[p]);
      apply_in_place(driver, s);
    }
    return s;
  };
}

Circuit qaoa_logical_circuit(const IsingModel& model, const QaoaParams& params) {
  Circuit c = Circuit::logical(model.n);
  for (size_t p = 0; p < params.betas.size() && p < params.gammas.size(); p++) {
    for (const auto& [indices, J] : model.terms) {
      const double angle = 2 * params.gammas[p] * J;
      if (indices.size() == 1) {
        c.rz(QubitLabel{indices[0]}, angle);
      } else if (indices.size() == 2) {
        QubitLabel a{indices[0]}, b{indices[1]};
        c.cnot(a, b);
        c.rz(b, angle);
        c.cnot(a, b);
      } else {
        throw std::invalid_argument("gate-level QAOA reference supports one- and two-body terms only");
      }
    }
    for (int i = 0; i < model.n; i++) c.rx(QubitLabel{i}, 2 * params.betas[p]);
  }
  return c;
}

void validate_graph(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside 0.." + std::to_string(g.n - 1));
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      throw std::invalid_argument("repeated edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

std::set<QubitLabel> graph_closure_labels(const Graph& g) {
  validate_graph(g);
  std::set<QubitLabel> labels;
  for (auto [a, b] : g.edges) {
    auto [i, j] = std::minmax(a, b);
    for (int k = i; k < j; k++) {
      for (int m = k + 1; m <= j; m++) labels.insert(QubitLabel{k, m});
    }
  }
  return labels;
}

ParityLayout graph_layout(const Graph& g) {
  ParityLayout base = reduced_layout(g.n, graph_closure_labels(g), {});
  return reduced_layout(g.n, graph_closure_labels(g),
                        find_plaquette_constraints(base.qubits(), base.positions()));
}

Circuit encoding_circuit(const ParityLayout& layout) {
  const int n = layout.n_logical();
  Circuit c = layout_circuit(layout);
  auto has = [&](int a, int b) { return layout.contains(QubitLabel{a, b}); };
  auto need = [&](int a, int b, int k, int m) {
    if (!has(a, b)) {
      throw std::invalid_argument("cannot encode " + QubitLabel{k, m}.str() + ": " + QubitLabel{a, b}.str() +
                                  " is missing");
    }
  };
  for (const auto& q : layout.qubits()) {
    if (q.size() > 2) throw std::invalid_argument("encoding supports two-body parity qubits only");
  }
  for (int k = 0; k + 1 < n; k++) {
    if (has(k, k + 1)) c.cnot(QubitLabel{k}, QubitLabel{k, k + 1});
  }
  for (int k = 0; k + 1 < n; k++) {
    if (has(k, k + 1)) c.cnot(QubitLabel{k + 1}, QubitLabel{k, k + 1});
  }
  for (int k = 0; k < n; k++) {
    for (int m = k + 2; m < n; m++) {
      if (!has(k, m)) continue;
      need(k, m - 1, k, m);
      c.cnot(QubitLabel{k, m - 1}, QubitLabel{k, m});
    }
  }
  for (int m = 0; m < n; m++) {
    for (int k = m - 2; k >= 0; k--) {
      if (!has(k, m)) continue;
      need(k + 1, m, k, m);
      c.cnot(QubitLabel{k + 1, m}, QubitLabel{k, m});
    }
  }
  return c;
}

Circuit decoding_circuit(const ParityLayout& layout) {
  Circuit enc = encoding_circuit(layout);
  std::vector<Gate> gates(enc.gates().rbegin(), enc.gates().rend());
  enc.replace_gates(std::move(gates));
  return enc;
}

Compiled graph_state_prep(const Graph& g, bool decode) {
  ParityLayout layout = graph_layout(g);
  Circuit c = layout_circuit(layout);
  for (int i = 0; i < g.n; i++) c.h(QubitLabel{i});
  c.append(encoding_circuit(layout));
  for (auto [a, b] : g.edges) c.append(synth_cphase(layout, std::min(a, b), std::max(a, b), kPi));
  if (decode) c.append(decoding_circuit(layout));
  c = apply_passes(c);
  return {std::move(layout), std::move(c)};
}

Circuit graph_state_logical(const Graph& g) {
  validate_graph(g);
  Circuit c = Circuit::logical(g.n);
  for (int i = 0; i < g.n; i++) c.h(QubitLabel{i});
  for (auto [a, b] : g.edges) c.cp(QubitLabel{a}, QubitLabel{b}, kPi);
  return c;
}

}  // namespace parity
