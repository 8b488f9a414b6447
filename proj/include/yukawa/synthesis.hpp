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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yukawa/circuit.hpp"
#include "yukawa/model.hpp"
#include "yukawa/pauli.hpp"

namespace yukawa {

// --- Pauli-string rotations ---------------------------------------------

/// Gates mapping `p` onto Z on `qubit` (H for X, S^dag then H for Y).
void append_basis_change(Circuit& circuit, int qubit, Pauli p);
/// Inverse of append_basis_change.
void append_basis_restore(Circuit& circuit, int qubit, Pauli p);

/// exp(-i theta/2 P) in the star layout: every support qubit feeds a CNOT into
/// the highest one, which carries the RZ. Costs 2 (weight - 1) CNOTs. Letter j
/// of `p` acts on qubit `offset + j`.
void append_pauli_rotation(Circuit& circuit, const PauliString& p, double theta, int offset = 0);

enum class Layout { Star, StarAncilla };

struct SynthesisReport {
  Circuit circuit;
  int cnot_count = 0;
  std::string target_description;
  std::optional<double> verification;  // phase-invariant distance to the target
};

/// prod_j exp(-i theta_j/2 P_j), first string applied first. With the ancilla
/// layout the register gains qubit n and the circuit equals
/// prod_j exp(-i theta_j/2 P_j (x) Z_anc), which reduces to the plain product
/// while the ancilla starts in |0>. `verify` fills the report's distance to
/// the dense target when the register fits the dense cap.
SynthesisReport synthesize_ordered_strings(const std::vector<PauliString>& strings, const std::vector<double>& angles,
                                           Layout layout, bool verify = false);

/// weight(first) + sum of consecutive Hamming distances + weight(last).
int ordered_strings_cnot_cost(const std::vector<PauliString>& strings);

/// Dense prod_j exp(-i theta_j/2 P_j) in application order.
DenseMatrix ordered_exponential(const std::vector<PauliString>& strings, const std::vector<double>& angles);

/// The region between two ancilla-layout rotations for one string qubit
/// (qubit 0) and the ancilla (qubit 1). The compressed form spends one CNOT
/// whenever the letters differ and equals the two-CNOT form up to a phase
/// gate it carries explicitly.
Circuit transition_zone(Pauli from, Pauli to, bool compressed = true);

/// Orders the even-Y strings over {X, Y} of one length along every other
/// codeword of a binary reflected Gray code, so neighbours differ in exactly
/// two letters.
std::vector<PauliString> gray_code_order(const std::vector<PauliString>& strings);

// --- One boson qubit ------------------------------------------------------

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Angles with RZ(alpha + pi) RX(beta) RZ(alpha - pi) = exp(i (m X + eta Z) t / 2).
EulerAngles euler_angles(double boson_mass, double coupling, double t);
Eigen::Matrix2cd euler_unitary(const EulerAngles& angles);

/// exp(-i H t) for N = 1 with two CNOTs, independent of t.
Circuit compressed_two_qubit_circuit(const ModelParams& params, double t);

// --- Two boson qubits -----------------------------------------------------

/// Real orthogonal matrix whose columns diagonalize the N = 2 displacement
/// b + b^dag to diag(-l+, l+, -l-, l-), l+- = sqrt(3 +- sqrt 6).
Eigen::Matrix4cd s_matrix();
/// arctan(sqrt 2 / (1 + sqrt 3)); the entangling core of s_matrix is
/// exp(i angle ZZ / 2) up to local gates.
double s_matrix_angle();
inline constexpr int kSMatrixCnots = 2;
/// Two-qubit circuit for s_matrix, local factors computed by KAK.
Circuit s_matrix_circuit();

/// eta+ / eta and eta- / eta, sqrt((3 +- sqrt 3) / 2).
std::array<double, 2> diagonal_coupling_ratios();
/// The interaction rotated by s_matrix: (eta+ Z1 Z0 + eta- Z2 Z1 Z0) / 2.
PauliSum diagonal_interaction(double coupling);
/// exp(-i diagonal_interaction(eta) dt) with four CNOTs.
Circuit diagonal_interaction_circuit(double coupling, double dt);

/// Second-order step exp(-i H0 dt/2) exp(-i H_int dt) exp(-i H0 dt/2) for
/// N = 2, the interaction factor exact; 8 CNOTs.
Circuit trotter_step_three_qubit(const ModelParams& params, double dt);

// --- Any register ---------------------------------------------------------

/// exp(-i H0 tau) as one RZ per qubit on a `width`-qubit register.
Circuit free_evolution_layer(const ModelParams& params, double tau, int width);

/// n_steps Trotter steps of size t / n_steps. Order 2 fuses neighbouring H0
/// half-steps. N = 1 and N = 2 use the exact interaction blocks above; larger
/// registers synthesize the interaction strings in the ancilla layout, in
/// Christofides tour order, so the circuit has one extra (top) qubit that each
/// step returns to |0>.
Circuit trotter_circuit(const ModelParams& params, double t, int n_steps, int order);
/// Width of the circuits trotter_circuit returns.
int trotter_circuit_width(const ModelParams& params);

}  // namespace yukawa
