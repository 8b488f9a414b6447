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
#include <vector>

#include "yukawa/pauli.hpp"

namespace yukawa {

/// Physical inputs of the single-site model. Energies share one unit; the
/// command-line driver fixes the boson mass to 1.
struct ModelParams {
  double fermion_mass = 1.0;  // M
  double boson_mass = 1.0;    // m
  double coupling = 0.0;      // eta
  int n_boson_qubits = 1;     // N, Fock cutoff 2^N - 1

  void validate() const;
  std::int64_t cutoff() const { return (std::int64_t{1} << n_boson_qubits) - 1; }
  int n_qubits() const { return n_boson_qubits + 1; }
  /// Period of the one-boson dynamics, 2*pi / sqrt(m^2 + eta^2).
  double reference_period() const;
};

/// eta = 4 m g beta^(3/2).
double effective_coupling(double boson_mass, double g, double beta);

/// Number of boson-register qubits for a Fock cutoff of the form 2^N - 1.
int qubits_for_cutoff(std::int64_t cutoff);

// Boson operators on an N-qubit register, Fock digit j on qubit j.
PauliSum boson_number_operator(int n_qubits);
PauliSum boson_creation_operator(int n_qubits);
PauliSum boson_annihilation_operator(int n_qubits);
PauliSum boson_displacement(int n_qubits);

/// a^dag a + c^dag c - 1 in the charge-zero sector: -Z on one qubit.
PauliSum fermion_charge_operator();
/// The same operator before the sector reduction, fermion and antifermion on
/// separate Jordan-Wigner qubits: diag(-1, 0, 0, 1).
PauliSum fermion_charge_operator_unreduced();
/// Occupation of the fermion qubit, (I - Z) / 2.
PauliSum fermion_number_operator();

struct QubitHamiltonian {
  PauliSum free;         // constant-free H0
  PauliSum interaction;  // H_int
  PauliSum total() const { return free + interaction; }
};

/// Fermion on qubit 0, boson digit j on qubit j + 1.
QubitHamiltonian build_hamiltonian(const ModelParams& params);

/// Places a boson-register operator on qubits 1..N of the full register.
PauliSum embed_boson_operator(const PauliSum& boson_op);

/// Pauli strings supporting the truncated b + b^dag, built by the doubling
/// recurrence: the previous set with I or Z on the new top digit, followed by
/// the even-Y strings over {X, Y} of full length.
std::vector<PauliString> generate_pauli_strings(int n_qubits);
std::int64_t string_count(int n_qubits);
/// All length-`length` strings over {X, Y} with an even number of Y letters.
std::vector<PauliString> even_y_strings(int length);

}  // namespace yukawa
