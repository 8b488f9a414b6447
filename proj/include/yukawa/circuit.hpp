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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace yukawa {

enum class GateKind { RX, RY, RZ, H, S, SDG, X, Y, Z, CNOT, GLOBAL_PHASE };

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

/// One gate. Rotations follow R_P(theta) = exp(-i theta P / 2); GLOBAL_PHASE
/// multiplies the state by exp(i angle) and touches no qubit.
struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;  // CNOT only
  double angle = 0.0;

  static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
  static Gate ry(int q, double theta) { return {GateKind::RY, q, -1, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate s(int q) { return {GateKind::S, q, -1, 0.0}; }
  static Gate sdg(int q) { return {GateKind::SDG, q, -1, 0.0}; }
  static Gate x(int q) { return {GateKind::X, q, -1, 0.0}; }
  static Gate y(int q) { return {GateKind::Y, q, -1, 0.0}; }
  static Gate z(int q) { return {GateKind::Z, q, -1, 0.0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }
  static Gate global_phase(double phi) { return {GateKind::GLOBAL_PHASE, -1, -1, phi}; }

  bool has_angle() const;
  bool is_rotation() const;
  Gate inverse() const;
  /// Qubits in listing order: {control, target} for CNOT, {} for GLOBAL_PHASE.
  std::vector<int> qubits() const;
  /// 2x2 matrix of a single-qubit gate.
  Eigen::Matrix2cd matrix() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list on a fixed register. Gates apply first to last.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  int cnot_count() const { return cnot_count_; }

  Circuit& add(const Gate& gate);
  /// Appends `other`, whose qubit q lands on `offset + q` of this circuit.
  Circuit& append(const Circuit& other, int offset = 0);
  Circuit inverse() const;

  /// One gate per line, e.g. "CNOT 0 1" or "RZ 2 0.785398163397".
  std::string to_text() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Gate& gate) const;

  int n_qubits_;
  std::vector<Gate> gates_;
  int cnot_count_ = 0;
};

inline int cnot_count(const Circuit& circuit) { return circuit.cnot_count(); }

void to_json(nlohmann::json& j, const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace yukawa
