// Copyright 2026 The yukawa-circuits Authors
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

#include "yukawa/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "yukawa/errors.hpp"
#include "yukawa/kak.hpp"
#include "yukawa/ordering.hpp"
#include "yukawa/statevector.hpp"

namespace yukawa {
namespace {

constexpr double kPi = std::numbers::pi;

/// 2x2 matrix of the gates append_basis_change emits, in matrix order.
Eigen::Matrix2cd basis_change_matrix(Pauli p) {
  Circuit c(1);
  append_basis_change(c, 0, p);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const auto& g : c.gates()) m = g.matrix() * m;
  return m;
}

void require_strings(const std::vector<PauliString>& strings) {
  if (strings.empty()) throw DomainError("no Pauli strings given");
  for (const auto& s : strings) {
    if (s.size() != strings.front().size()) throw DomainError("Pauli strings differ in length");
    if (s.is_identity()) throw DomainError("identity string " + s.to_string() + " has no rotation to synthesize");
  }
}

/// Compressed transition for one string qubit into the ancilla. The two-CNOT
/// region equals W_q [|+><+|_a (x) I + |-><-|_a (x) V], V = W^dag Z W Z, which
/// is a controlled Pauli conjugated by H on the ancilla.
void append_compressed_transition(Circuit& c, int q, int anc, Pauli from, Pauli to) {
  if (from == to) return;
  if (to == Pauli::I) {
    c.add(Gate::cnot(q, anc));
    append_basis_restore(c, q, from);
    return;
  }
  if (from == Pauli::I) {
    append_basis_change(c, q, to);
    c.add(Gate::cnot(q, anc));
    return;
  }
  const Eigen::Matrix2cd w = basis_change_matrix(to) * basis_change_matrix(from).adjoint();
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  const Eigen::Matrix2cd v = w.adjoint() * z * w * z;
  Eigen::Matrix2cd x, y;
  x << 0, 1, 1, 0;
  y << 0, Complex{0, -1}, Complex{0, 1}, 0;
  const Complex tx = (x * v).trace() / 2.0, ty = (y * v).trace() / 2.0;
  const bool use_y = std::abs(ty) > std::abs(tx);
  const double gamma = std::arg(use_y ? ty : tx);
  if (std::abs(std::abs(use_y ? ty : tx) - 1.0) > 1e-12) throw InvariantError("transition residue is not X or Y");

  c.add(Gate::h(anc));
  if (use_y) c.add(Gate::sdg(q));
  c.add(Gate::cnot(anc, q));
  if (use_y) c.add(Gate::s(q));
  c.add(Gate::rz(anc, gamma));
  c.add(Gate::global_phase(gamma / 2.0));
  c.add(Gate::h(anc));
  append_basis_restore(c, q, from);
  append_basis_change(c, q, to);
}

Circuit interaction_block(const ModelParams& params, double dt);

}  // namespace

void append_basis_change(Circuit& circuit, int qubit, Pauli p) {
  switch (p) {
    case Pauli::X: circuit.add(Gate::h(qubit)); break;
    case Pauli::Y:
      circuit.add(Gate::sdg(qubit));
      circuit.add(Gate::h(qubit));
      break;
    default: break;
  }
}

void append_basis_restore(Circuit& circuit, int qubit, Pauli p) {
  switch (p) {
    case Pauli::X: circuit.add(Gate::h(qubit)); break;
    case Pauli::Y:
      circuit.add(Gate::h(qubit));
      circuit.add(Gate::s(qubit));
      break;
    default: break;
  }
}

void append_pauli_rotation(Circuit& circuit, const PauliString& p, double theta, int offset) {
  const auto support = p.support();
  if (support.empty()) throw DomainError("identity string has no rotation to synthesize");
  const int target = offset + support.back();
  for (const int q : support) append_basis_change(circuit, offset + q, p[q]);
  for (std::size_t k = 0; k + 1 < support.size(); ++k) circuit.add(Gate::cnot(offset + support[k], target));
  circuit.add(Gate::rz(target, theta));
  for (std::size_t k = support.size() - 1; k-- > 0;) circuit.add(Gate::cnot(offset + support[k], target));
  for (const int q : support) append_basis_restore(circuit, offset + q, p[q]);
}

int ordered_strings_cnot_cost(const std::vector<PauliString>& strings) {
  require_strings(strings);
  int cost = hamming_weight(strings.front()) + hamming_weight(strings.back());
  for (std::size_t j = 0; j + 1 < strings.size(); ++j) cost += hamming_distance(strings[j], strings[j + 1]);
  return cost;
}

DenseMatrix ordered_exponential(const std::vector<PauliString>& strings, const std::vector<double>& angles) {
  require_strings(strings);
  if (angles.size() != strings.size()) throw DomainError("need one angle per string");
  const int n = strings.front().size();
  if (n > kMaxDenseQubits) throw ResourceError("ordered_exponential: register exceeds the dense cap");
  const auto dim = Eigen::Index{1} << n;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (std::size_t j = 0; j < strings.size(); ++j) {
    const DenseMatrix p = to_matrix(PauliSum::single(1.0, strings[j]));
    const DenseMatrix step = std::cos(angles[j] / 2) * DenseMatrix::Identity(dim, dim) -
                             Complex{0.0, std::sin(angles[j] / 2)} * p;
    u = step * u;
  }
  return u;
}

SynthesisReport synthesize_ordered_strings(const std::vector<PauliString>& strings, const std::vector<double>& angles,
                                           Layout layout, bool verify) {
  require_strings(strings);
  if (angles.size() != strings.size()) throw DomainError("need one angle per string");
  const int n = strings.front().size();
  SynthesisReport report{Circuit(layout == Layout::StarAncilla ? n + 1 : n), 0, {}, std::nullopt};
  Circuit& c = report.circuit;

  if (layout == Layout::Star) {
    for (std::size_t j = 0; j < strings.size(); ++j) append_pauli_rotation(c, strings[j], angles[j]);
  } else {
    const int anc = n;
    const PauliString none = PauliString::identity(n);
    const PauliString* prev = &none;
    for (std::size_t j = 0; j < strings.size(); ++j) {
      for (int q = 0; q < n; ++q) append_compressed_transition(c, q, anc, (*prev)[q], strings[j][q]);
      c.add(Gate::rz(anc, angles[j]));
      prev = &strings[j];
    }
    for (int q = 0; q < n; ++q) append_compressed_transition(c, q, anc, (*prev)[q], Pauli::I);
    if (c.cnot_count() != ordered_strings_cnot_cost(strings))
      throw InvariantError("ancilla layout CNOT count disagrees with the weight/distance sum");
  }
  report.cnot_count = c.cnot_count();
  report.target_description = "ordered exponential of " + std::to_string(strings.size()) + " Pauli strings (" +
                              (layout == Layout::Star ? "star" : "star+ancilla") + " layout)";
  if (verify && c.n_qubits() <= kMaxDenseQubits) {
    std::vector<PauliString> target = strings;
    if (layout == Layout::StarAncilla)
      for (auto& s : target) s = PauliString::concat(PauliString::parse("Z"), s);
    report.verification = phase_distance(circuit_unitary(c), ordered_exponential(target, angles));
  }
  return report;
}

Circuit transition_zone(Pauli from, Pauli to, bool compressed) {
  Circuit c(2);
  if (compressed) {
    append_compressed_transition(c, 0, 1, from, to);
    return c;
  }
  if (from != Pauli::I) {
    c.add(Gate::cnot(0, 1));
    append_basis_restore(c, 0, from);
  }
  if (to != Pauli::I) {
    append_basis_change(c, 0, to);
    c.add(Gate::cnot(0, 1));
  }
  return c;
}

std::vector<PauliString> gray_code_order(const std::vector<PauliString>& strings) {
  if (strings.empty()) throw DomainError("gray_code_order: empty set");
  const int n = strings.front().size();
  if (n > 20) throw ResourceError("gray_code_order: strings longer than 20 letters");
  std::vector<PauliString> given = strings;
  std::sort(given.begin(), given.end());
  if (given != even_y_strings(n)) throw DomainError("gray_code_order: input is not the even-Y set over {X, Y}");
  std::vector<PauliString> out;
  out.reserve(strings.size());
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); i += 2) {
    const std::uint64_t code = i ^ (i >> 1);
    std::vector<Pauli> ops(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) ops[static_cast<std::size_t>(q)] = (code >> q) & 1 ? Pauli::Y : Pauli::X;
    out.emplace_back(std::move(ops));
  }
  return out;
}

EulerAngles euler_angles(double boson_mass, double coupling, double t) {
  if (!(boson_mass > 0.0)) throw DomainError("boson mass must be positive");
  if (!std::isfinite(t) || !std::isfinite(coupling)) throw DomainError("euler_angles: non-finite input");
  if (coupling == 0.0) return {0.0, std::remainder(boson_mass * t, 2 * kPi)};
  const double w = std::hypot(boson_mass, coupling);
  const double c = std::cos(w * t / 2), s = std::sin(w * t / 2);
  const double sz = s * coupling / w, sx = s * boson_mass / w;
  return {-std::atan2(sz, c), 2.0 * std::atan2(sx, std::hypot(c, sz))};
}

Eigen::Matrix2cd euler_unitary(const EulerAngles& a) {
  return Gate::rz(0, a.alpha + kPi).matrix() * Gate::rx(0, a.beta).matrix() * Gate::rz(0, a.alpha - kPi).matrix();
}

Circuit compressed_two_qubit_circuit(const ModelParams& params, double t) {
  params.validate();
  if (params.n_boson_qubits != 1) throw DomainError("compressed circuit needs N = 1");
  // H(1) and CNOT(0, 1) turn -(m/2) Z1 - (eta/2) X1 Z0 into -(m X1 + eta Z1)/2;
  // -M Z0 commutes with everything and is applied last.
  const auto a = euler_angles(params.boson_mass, params.coupling, t);
  Circuit c(2);
  c.add(Gate::h(1));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::rz(1, a.alpha - kPi));
  c.add(Gate::rx(1, a.beta));
  c.add(Gate::rz(1, a.alpha + kPi));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::h(1));
  c.add(Gate::rz(0, -2.0 * params.fermion_mass * t));
  return c;
}

Eigen::Matrix4cd s_matrix() {
  const double lp = std::sqrt(3.0 + std::sqrt(6.0)) / std::sqrt(3.0);
  const double lm = std::sqrt(3.0 - std::sqrt(6.0)) / std::sqrt(3.0);
  Eigen::Matrix4d s;
  s << -lm, lm, lp, -lp, 1, 1, -1, -1, -lp, lp, -lm, lm, 1, 1, 1, 1;
  return (0.5 * s).cast<Complex>();
}

double s_matrix_angle() { return std::atan(std::sqrt(2.0) / (1.0 + std::sqrt(3.0))); }

Circuit s_matrix_circuit() {
  static const Circuit circuit = [] {
    Circuit c = kak_circuit(s_matrix());
    if (c.cnot_count() != kSMatrixCnots) throw InvariantError("s_matrix core is not a single ZZ-type term");
    return c;
  }();
  return circuit;
}

std::array<double, 2> diagonal_coupling_ratios() {
  return {std::sqrt((3.0 + std::sqrt(3.0)) / 2.0), std::sqrt((3.0 - std::sqrt(3.0)) / 2.0)};
}

PauliSum diagonal_interaction(double coupling) {
  const auto [plus, minus] = diagonal_coupling_ratios();
  PauliSum h(3);
  h.add(0.5 * coupling * plus, PauliString::parse("IZZ"));
  h.add(0.5 * coupling * minus, PauliString::parse("ZZZ"));
  return h;
}

Circuit diagonal_interaction_circuit(double coupling, double dt) {
  const auto [plus, minus] = diagonal_coupling_ratios();
  Circuit c(3);
  c.add(Gate::cnot(0, 1));
  c.add(Gate::rz(1, coupling * plus * dt));
  c.add(Gate::cnot(2, 1));
  c.add(Gate::rz(1, coupling * minus * dt));
  c.add(Gate::cnot(2, 1));
  c.add(Gate::cnot(0, 1));
  return c;
}

Circuit free_evolution_layer(const ModelParams& params, double tau, int width) {
  const PauliSum free = build_hamiltonian(params).free;
  Circuit c(width);
  for (const auto& [s, coeff] : free.terms()) {
    const auto support = s.support();
    if (support.size() != 1 || s[support.front()] != Pauli::Z) throw InvariantError("free Hamiltonian is not single-Z");
    c.add(Gate::rz(support.front(), 2.0 * coeff.real() * tau));
  }
  return c;
}

Circuit trotter_step_three_qubit(const ModelParams& params, double dt) {
  params.validate();
  if (params.n_boson_qubits != 2) throw DomainError("three-qubit Trotter step needs N = 2");
  return trotter_circuit(params, dt, 1, 2);
}

int trotter_circuit_width(const ModelParams& params) {
  return params.n_boson_qubits >= 3 ? params.n_qubits() + 1 : params.n_qubits();
}

namespace {

struct InteractionPlan {
  std::vector<PauliString> strings;  // tour order, full register
  std::vector<double> coefficients;
};

/// Interaction strings of an N >= 3 register in Christofides order; depends on
/// N only, so it is computed once per N.
const InteractionPlan& interaction_plan(const ModelParams& params) {
  static std::mutex mutex;
  static std::map<int, InteractionPlan> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find(params.n_boson_qubits);
  if (it == cache.end()) {
    ModelParams unit = params;
    unit.coupling = 1.0;
    const PauliSum h = build_hamiltonian(unit).interaction;
    InteractionPlan plan;
    for (const auto& s : christofides(build_ordering_graph(h.support())).order) {
      plan.strings.push_back(s);
      plan.coefficients.push_back(h.coefficient(s).real());
    }
    it = cache.emplace(params.n_boson_qubits, std::move(plan)).first;
  }
  return it->second;
}

Circuit interaction_block(const ModelParams& params, double dt) {
  const int width = trotter_circuit_width(params);
  Circuit c(width);
  switch (params.n_boson_qubits) {
    case 1:
      // -(eta/2) X1 Z0
      append_pauli_rotation(c, PauliString::parse("XZ"), -params.coupling * dt);
      return c;
    case 2: {
      const Circuit s = s_matrix_circuit();
      c.append(s.inverse(), 1);
      c.append(diagonal_interaction_circuit(params.coupling, dt));
      c.append(s, 1);
      return c;
    }
    default: {
      // Forward at half angle then backward; the two middle rotations merge.
      const auto& plan = interaction_plan(params);
      const std::size_t k = plan.strings.size();
      std::vector<PauliString> strings;
      std::vector<double> angles;
      for (std::size_t j = 0; j < k; ++j) {
        strings.push_back(plan.strings[j]);
        angles.push_back(plan.coefficients[j] * params.coupling * dt * (j + 1 == k ? 2.0 : 1.0));
      }
      for (std::size_t j = k - 1; j-- > 0;) {
        strings.push_back(plan.strings[j]);
        angles.push_back(plan.coefficients[j] * params.coupling * dt);
      }
      c.append(synthesize_ordered_strings(strings, angles, Layout::StarAncilla).circuit);
      return c;
    }
  }
}

}  // namespace

Circuit trotter_circuit(const ModelParams& params, double t, int n_steps, int order) {
  params.validate();
  if (n_steps < 1) throw DomainError("trotter_circuit needs at least one step");
  if (order != 1 && order != 2) throw DomainError("trotter order must be 1 or 2");
  if (!std::isfinite(t)) throw DomainError("trotter_circuit: non-finite time");
  const int width = trotter_circuit_width(params);
  if (width > kMaxStateQubits) throw ResourceError("trotter_circuit: register exceeds the statevector cap");
  const double dt = t / n_steps;
  Circuit c(width);
  const Circuit block = interaction_block(params, dt);
  if (order == 1) {
    const Circuit free = free_evolution_layer(params, dt, width);
    for (int k = 0; k < n_steps; ++k) c.append(free).append(block);
    return c;
  }
  const Circuit half = free_evolution_layer(params, dt / 2, width);
  const Circuit full = free_evolution_layer(params, dt, width);
  c.append(half);
  for (int k = 0; k < n_steps; ++k) c.append(block).append(k + 1 < n_steps ? full : half);
  return c;
}

}  // namespace yukawa
