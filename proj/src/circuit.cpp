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

#include "yukawa/circuit.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kNames = {{
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::SDG, "SDG"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::GLOBAL_PHASE, "GLOBAL_PHASE"},
}};

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", a);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw DomainError("unknown gate kind '" + std::string(name) + "'");
}

bool Gate::has_angle() const { return is_rotation() || kind == GateKind::GLOBAL_PHASE; }

bool Gate::is_rotation() const {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::GLOBAL_PHASE: g.angle = -angle; break;
    case GateKind::S: g.kind = GateKind::SDG; break;
    case GateKind::SDG: g.kind = GateKind::S; break;
    default: break;
  }
  return g;
}

std::vector<int> Gate::qubits() const {
  if (kind == GateKind::GLOBAL_PHASE) return {};
  if (kind == GateKind::CNOT) return {control, target};
  return {target};
}

Eigen::Matrix2cd Gate::matrix() const {
  using C = std::complex<double>;
  const double r = 1.0 / std::numbers::sqrt2;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const C i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::RX: m << c, -i * s, -i * s, c; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2)); break;
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::SDG: m << 1, 0, 0, -i; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -i, i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::GLOBAL_PHASE: m = std::exp(i * angle) * Eigen::Matrix2cd::Identity(); break;
    case GateKind::CNOT: throw DomainError("CNOT has no 2x2 matrix");
  }
  return m;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw DomainError("circuit needs at least one qubit");
}

void Circuit::check(const Gate& g) const {
  if (g.has_angle() && !std::isfinite(g.angle)) throw DomainError("gate angle must be finite");
  if (g.kind == GateKind::GLOBAL_PHASE) return;
  if (g.target < 0 || g.target >= n_qubits_)
    throw DomainError("gate qubit " + std::to_string(g.target) + " outside a " +
                      std::to_string(n_qubits_) + "-qubit circuit");
  if (g.kind == GateKind::CNOT) {
    if (g.control < 0 || g.control >= n_qubits_) throw DomainError("CNOT control outside the circuit");
    if (g.control == g.target) throw DomainError("CNOT control equals target");
  }
}

Circuit& Circuit::add(const Gate& gate) {
  check(gate);
  gates_.push_back(gate);
  if (gate.kind == GateKind::CNOT) ++cnot_count_;
  return *this;
}

Circuit& Circuit::append(const Circuit& other, int offset) {
  if (offset < 0 || offset + other.n_qubits_ > n_qubits_) throw DomainError("appended circuit does not fit");
  for (Gate g : other.gates_) {
    if (g.kind != GateKind::GLOBAL_PHASE) g.target += offset;
    if (g.kind == GateKind::CNOT) g.control += offset;
    add(g);
  }
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.add(it->inverse());
  return out;
}

std::string Circuit::to_text() const {
  std::string out;
  for (const auto& g : gates_) {
    out += gate_name(g.kind);
    for (int q : g.qubits()) out += " " + std::to_string(q);
    if (g.has_angle()) out += " " + format_angle(g.angle);
    out += '\n';
  }
  return out;
}

void to_json(nlohmann::json& j, const Circuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : circuit.gates()) {
    nlohmann::json item = {{"kind", gate_name(g.kind)}, {"qubits", g.qubits()}};
    if (g.has_angle()) item["angle"] = g.angle;
    gates.push_back(std::move(item));
  }
  j = {{"n_qubits", circuit.n_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c(j.at("n_qubits").get<int>());
    for (const auto& item : j.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_name(item.at("kind").get<std::string>());
      const auto qubits = item.at("qubits").get<std::vector<int>>();
      const std::size_t expected = g.kind == GateKind::CNOT ? 2 : g.kind == GateKind::GLOBAL_PHASE ? 0 : 1;
      if (qubits.size() != expected) throw DomainError("wrong qubit count for gate " + item.at("kind").dump());
      if (g.kind == GateKind::CNOT) {
        g.control = qubits[0];
        g.target = qubits[1];
      } else if (expected == 1) {
        g.target = qubits[0];
      } else {
        g.target = -1;
      }
      if (g.has_angle()) g.angle = item.at("angle").get<double>();
      c.add(g);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed circuit JSON: ") + e.what());
  }
}

}  // namespace yukawa
