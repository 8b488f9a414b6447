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

#include <cstdint>
#include <span>

#include "yukawa/circuit.hpp"
#include "yukawa/pauli.hpp"

namespace yukawa {

inline constexpr int kMaxStateQubits = 20;

/// Normalized amplitude vector; basis index bit j is qubit j.
class Statevector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  /// |0...0>.
  explicit Statevector(int n_qubits);
  static Statevector basis(int n_qubits, std::uint64_t index);
  /// Takes ownership of `amplitudes` (length 2^n); rejects unnormalized input.
  static Statevector from_amplitudes(Eigen::VectorXcd amplitudes);
  /// Product state with `high` on the upper qubits.
  static Statevector tensor(const Statevector& high, const Statevector& low);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex operator[](std::uint64_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
  double norm() const { return amps_.norm(); }

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  Statevector(int n_qubits, Eigen::VectorXcd amps);

  int n_qubits_;
  Eigen::VectorXcd amps_;
};

Statevector apply_circuit(const Circuit& circuit, Statevector state);

/// Product of the gate matrices in application order.
DenseMatrix circuit_unitary(const Circuit& circuit);

/// min over phi of ||a - e^{i phi} b||_F: zero iff the unitaries agree up to a
/// global phase.
double phase_distance(const DenseMatrix& a, const DenseMatrix& b);

/// P |psi> for a single Pauli string.
Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& psi);
/// <psi| O |psi> for a Hermitian O of matching width.
double expectation(const Statevector& state, const PauliSum& observable);

/// exp(-i H t) for a Hermitian Pauli sum, through one eigendecomposition that
/// is reused for every time queried.
class Propagator {
 public:
  explicit Propagator(const PauliSum& hamiltonian);

  int n_qubits() const { return n_qubits_; }
  DenseMatrix at(double t) const;
  Statevector evolve(const Statevector& state, double t) const;
  const Eigen::VectorXd& energies() const { return energies_; }

 private:
  int n_qubits_;
  Eigen::VectorXd energies_;
  DenseMatrix basis_;
};

DenseMatrix exact_propagator(const PauliSum& hamiltonian, double t);

}  // namespace yukawa
