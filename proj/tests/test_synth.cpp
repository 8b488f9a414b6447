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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "support.hpp"
#include "yukawa/errors.hpp"
#include "yukawa/model.hpp"
#include "yukawa/statevector.hpp"
#include "yukawa/synthesis.hpp"

namespace yukawa {
namespace {

using testing::Matrix;

constexpr double kPi = std::numbers::pi;

const ModelParams kCaption2{7.0, 1.0, 1.7, 2};

Matrix dense_total_propagator(const ModelParams& p, double t) {
  return testing::dense_propagator(testing::sum_matrix(build_hamiltonian(p).total()), t);
}

/// Product of exp(-i theta/2 P) built from dense Pauli matrices, first factor applied first.
Matrix oracle_product(const std::vector<std::string>& strings, const std::vector<double>& angles) {
  const auto dim = Eigen::Index{1} << strings.front().size();
  Matrix u = Matrix::Identity(dim, dim);
  for (std::size_t j = 0; j < strings.size(); ++j)
    u = testing::dense_propagator(testing::string_matrix(strings[j]), angles[j] / 2) * u;
  return u;
}

/// The block of a circuit unitary acting on states whose top (ancilla) qubit is |0>.
Matrix ancilla_zero_block(const Matrix& u) {
  const auto half = u.rows() / 2;
  return u.topLeftCorner(half, half);
}

TEST(EulerAngles, Examples) {
  const auto zero = euler_angles(1.0, 1.7, 0.0);
  EXPECT_DOUBLE_EQ(zero.alpha, 0.0);
  EXPECT_DOUBLE_EQ(zero.beta, 0.0);

  const double m = 1.0, eta = 1.7, w = std::hypot(m, eta);
  const Matrix generator = m * testing::pauli_matrix('X') + eta * testing::pauli_matrix('Z');
  const double t = kPi / w;
  EXPECT_LT(phase_distance(euler_unitary(euler_angles(m, eta, t)), testing::dense_propagator(generator, -t / 2)),
            1e-10);

  const double mt = 0.83;
  const auto free = euler_angles(m, 0.0, mt);
  EXPECT_DOUBLE_EQ(free.alpha, 0.0);
  EXPECT_LT(phase_distance(euler_unitary(free), Gate::rx(0, -mt).matrix()), 1e-12);
  EXPECT_THROW(euler_angles(0.0, 1.0, 1.0), DomainError);
}

// Property: the angles reproduce exp(i (m X + eta Z) t / 2) on a dense time
// grid that crosses every branch point of the half-angle forms.
TEST(EulerAngles, ReproduceTargetAcrossBranchPoints) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const double m = testing::uniform(rng, 0.2, 5), eta = testing::uniform(rng, -3, 3);
    const double w = std::hypot(m, eta);
    const Matrix generator = m * testing::pauli_matrix('X') + eta * testing::pauli_matrix('Z');
    for (int k = -8; k <= 8; ++k) {
      const double t = k * kPi / (2 * w) * (1 + 1e-13 * trial);
      EXPECT_LT(phase_distance(euler_unitary(euler_angles(m, eta, t)), testing::dense_propagator(generator, -t / 2)),
                1e-10)
          << "k=" << k;
    }
  }
}

TEST(CompressedCircuit, TwoCnotsAndExactForRandomParameters) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelParams p{testing::uniform(rng, 0.1, 10), testing::uniform(rng, 0.1, 5), testing::uniform(rng, -3, 3),
                        1};
    const double t = testing::uniform(rng, -10, 10);
    const Circuit c = compressed_two_qubit_circuit(p, t);
    EXPECT_EQ(cnot_count(c), 2);
    EXPECT_LT(phase_distance(circuit_unitary(c), dense_total_propagator(p, t)), 1e-9);
  }
}

TEST(CompressedCircuit, IdentityAtZeroAndPeriodicBosonNumber) {
  const ModelParams p{7.0, 1.0, 1.7, 1};
  EXPECT_LT(phase_distance(circuit_unitary(compressed_two_qubit_circuit(p, 0.0)), Matrix::Identity(4, 4)), 1e-14);

  const auto start = Statevector::basis(2, 0b01);
  const auto back = apply_circuit(compressed_two_qubit_circuit(p, p.reference_period()), start);
  const double n_back = (std::norm(back[0b10]) + std::norm(back[0b11]));
  EXPECT_NEAR(n_back, 0.0, 1e-12);
  const auto mid = apply_circuit(compressed_two_qubit_circuit(p, p.reference_period() / 2), start);
  EXPECT_GT(std::norm(mid[0b10]) + std::norm(mid[0b11]), 0.1);

  EXPECT_THROW(compressed_two_qubit_circuit(kCaption2, 1.0), DomainError);
}

TEST(SMatrix, AngleValue) {
  EXPECT_NEAR(s_matrix_angle(), std::atan(std::numbers::sqrt2 / (1 + std::numbers::sqrt3)), 1e-15);
  EXPECT_NEAR(s_matrix_angle(), 0.4776583, 1e-7);
}

TEST(SMatrix, DiagonalizesDisplacement) {
  const Matrix s = s_matrix();
  EXPECT_LT(s.imag().norm(), 1e-15);
  EXPECT_LT((s.adjoint() * s - Matrix::Identity(4, 4)).norm(), 1e-14);

  const double lp = std::sqrt(3 + std::sqrt(6.0)), lm = std::sqrt(3 - std::sqrt(6.0));
  Eigen::Vector4cd expected(-lp, lp, -lm, lm);
  const Matrix d = s.adjoint() * testing::sum_matrix(boson_displacement(2)) * s;
  EXPECT_LT((d - Matrix(expected.asDiagonal())).norm(), 1e-10);
}

TEST(SMatrix, CircuitMatchesMatrix) {
  const Circuit c = s_matrix_circuit();
  EXPECT_EQ(c.n_qubits(), 2);
  EXPECT_EQ(c.cnot_count(), kSMatrixCnots);
  EXPECT_LE(kSMatrixCnots, 2);
  EXPECT_LT(phase_distance(circuit_unitary(c), s_matrix()), 1e-10);
}

TEST(DiagonalInteraction, CouplingRatios) {
  const auto [plus, minus] = diagonal_coupling_ratios();
  EXPECT_NEAR(plus, 1.538189, 1e-6);
  EXPECT_NEAR(minus, 0.796225, 1e-6);
}

TEST(DiagonalInteraction, CircuitMatchesDenseExponential) {
  EXPECT_LT(phase_distance(circuit_unitary(diagonal_interaction_circuit(1.7, 0.0)), Matrix::Identity(8, 8)), 1e-15);
  std::mt19937_64 rng(13);
  const auto [plus, minus] = diagonal_coupling_ratios();
  for (int trial = 0; trial < 30; ++trial) {
    const double eta = testing::uniform(rng, -3, 3), dt = testing::uniform(rng, -2, 2);
    const Matrix h = 0.5 * eta * (plus * testing::string_matrix("IZZ") + minus * testing::string_matrix("ZZZ"));
    const Circuit c = diagonal_interaction_circuit(eta, dt);
    EXPECT_LE(c.cnot_count(), 4);
    EXPECT_LT(phase_distance(circuit_unitary(c), testing::dense_propagator(h, dt)), 1e-10);
  }
}

TEST(DiagonalInteraction, RotatedInteractionIsTheOriginal) {
  // (S (x) 1) H_diag (S (x) 1)^dag restores the interaction in the Fock basis.
  const double eta = 1.3;
  const Matrix s_full = testing::kron(Matrix(s_matrix()), Matrix(Matrix::Identity(2, 2)));
  const Matrix rotated = s_full * testing::sum_matrix(diagonal_interaction(eta)) * s_full.adjoint();
  EXPECT_LT((rotated - testing::sum_matrix(build_hamiltonian({1.0, 1.0, eta, 2}).interaction)).norm(), 1e-10);
}

TEST(TrotterStep, EightCnotsAndThirdOrderLocalError) {
  EXPECT_EQ(cnot_count(trotter_step_three_qubit(kCaption2, 0.0)), 8);
  EXPECT_LT(phase_distance(circuit_unitary(trotter_step_three_qubit(kCaption2, 0.0)), Matrix::Identity(8, 8)), 1e-12);

  auto error = [](double dt) {
    return phase_distance(circuit_unitary(trotter_step_three_qubit(kCaption2, dt)),
                          dense_total_propagator(kCaption2, dt));
  };
  for (const double dt : {0.01, 0.03, 0.05, 0.1, 0.2}) {
    EXPECT_EQ(cnot_count(trotter_step_three_qubit(kCaption2, dt)), 8);
    EXPECT_LT(error(dt) / (dt * dt * dt), 5.0) << dt;
  }
  const double ratio = error(0.2) / error(0.1);
  EXPECT_GE(ratio, 6.0);
  EXPECT_LE(ratio, 10.0);
  EXPECT_THROW(trotter_step_three_qubit({7.0, 1.0, 1.7, 1}, 0.1), DomainError);
}

TEST(TrotterCircuit, SingleStepIsTheThreeQubitStep) {
  EXPECT_EQ(trotter_circuit(kCaption2, 0.37, 1, 2), trotter_step_three_qubit(kCaption2, 0.37));
  EXPECT_THROW(trotter_circuit(kCaption2, 1.0, 0, 2), DomainError);
  EXPECT_THROW(trotter_circuit(kCaption2, 1.0, 1, 3), DomainError);
}

TEST(TrotterCircuit, GlobalErrorIsSecondOrder) {
  const double t0 = kCaption2.reference_period();
  const Matrix exact = dense_total_propagator(kCaption2, t0);
  const double e8 = phase_distance(circuit_unitary(trotter_circuit(kCaption2, t0, 8, 2)), exact);
  const double e16 = phase_distance(circuit_unitary(trotter_circuit(kCaption2, t0, 16, 2)), exact);
  EXPECT_GE(e8 / e16, 3.0);
  EXPECT_LE(e8 / e16, 5.0);
  EXPECT_EQ(cnot_count(trotter_circuit(kCaption2, t0, 16, 2)), 16 * 8);
}

TEST(TrotterCircuit, OneBosonQubitConvergesToCompressedCircuit) {
  const ModelParams p{7.0, 1.0, 1.7, 1};
  const double t0 = p.reference_period();
  const Matrix compressed = circuit_unitary(compressed_two_qubit_circuit(p, t0));
  EXPECT_LE(phase_distance(circuit_unitary(trotter_circuit(p, t0, 64, 2)), compressed), 1e-2);
}

TEST(TrotterCircuit, SecondOrderBeatsFirstOrder) {
  for (const int n : {1, 2}) {
    const ModelParams p{7.0, 1.0, 1.7, n};
    // At t0 with N = 1 the exact propagator is diagonal, commutes with the
    // free layer, and both orders tie; the order-2 product is the order-1
    // product conjugated by half a free layer.
    for (const double t : {0.37 * p.reference_period(), p.reference_period()}) {
      const Matrix exact = dense_total_propagator(p, t);
      for (const int steps : {4, 16}) {
        const double first = phase_distance(circuit_unitary(trotter_circuit(p, t, steps, 1)), exact);
        const double second = phase_distance(circuit_unitary(trotter_circuit(p, t, steps, 2)), exact);
        EXPECT_LE(second, first * (1 + 1e-9)) << "N=" << n << " steps=" << steps << " t=" << t;
      }
    }
  }
}

TEST(TrotterCircuit, AncillaFallbackConvergesForThreeBosonQubits) {
  const ModelParams p{7.0, 1.0, 1.7, 3};
  EXPECT_EQ(trotter_circuit_width(p), 5);
  const double t = 0.5;
  const Matrix exact = dense_total_propagator(p, t);
  std::vector<double> errors;
  for (const int steps : {4, 8, 16}) {
    const Matrix block = ancilla_zero_block(circuit_unitary(trotter_circuit(p, t, steps, 2)));
    EXPECT_LT((block.adjoint() * block - Matrix::Identity(16, 16)).norm(), 1e-10);
    errors.push_back(phase_distance(block, exact));
  }
  EXPECT_GT(errors[0] / errors[1], 3.0);
  EXPECT_GT(errors[1] / errors[2], 3.0);
}

TEST(TrotterCircuit, NoCouplingIsExactFreeEvolution) {
  const ModelParams p{3.0, 1.0, 0.0, 2};
  EXPECT_LT(phase_distance(circuit_unitary(trotter_circuit(p, 2.0, 1, 2)), dense_total_propagator(p, 2.0)), 1e-12);
  EXPECT_EQ(free_evolution_layer(p, 0.4, 3).cnot_count(), 0);
}

TEST(PauliRotation, StarLayoutMatchesExponential) {
  Circuit c(3);
  append_pauli_rotation(c, PauliString::parse("ZZZ"), 0.7);
  EXPECT_EQ(c.cnot_count(), 4);
  EXPECT_EQ(std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.kind == GateKind::RZ; }),
            1);
  EXPECT_LT((circuit_unitary(c) - oracle_product({"ZZZ"}, {0.7})).norm(), 1e-12);

  Circuit y(4);
  append_pauli_rotation(y, PauliString::parse("YXZ"), -1.1, 1);
  EXPECT_LT((circuit_unitary(y) - oracle_product({"YXZI"}, {-1.1})).norm(), 1e-12);
}

TEST(OrderedStrings, AncillaLayoutExample) {
  const std::vector<PauliString> strings{PauliString::parse("XX"), PauliString::parse("ZZ")};
  const std::vector<double> angles{0.4, -1.3};
  const auto report = synthesize_ordered_strings(strings, angles, Layout::StarAncilla, true);
  EXPECT_EQ(report.cnot_count, 6);
  EXPECT_EQ(report.circuit.n_qubits(), 3);
  ASSERT_TRUE(report.verification.has_value());
  EXPECT_LT(*report.verification, 1e-10);
  const Matrix block = ancilla_zero_block(circuit_unitary(report.circuit));
  EXPECT_LT(phase_distance(block, oracle_product({"XX", "ZZ"}, angles)), 1e-10);

  const Matrix reversed = oracle_product({"ZZ", "XX"}, {-1.3, 0.4});
  const Matrix forward = oracle_product({"XX", "ZZ"}, angles);
  EXPECT_LT(phase_distance(reversed, forward), 1e-12);  // XX and ZZ commute
  const Matrix xz = oracle_product({"XI", "ZI"}, {0.4, -1.3});
  EXPECT_GT(phase_distance(oracle_product({"ZI", "XI"}, {-1.3, 0.4}), xz), 0.1);
}

TEST(OrderedStrings, RejectsBadInput) {
  const auto xx = PauliString::parse("XX");
  EXPECT_THROW(synthesize_ordered_strings({}, {}, Layout::Star), DomainError);
  EXPECT_THROW(synthesize_ordered_strings({xx}, {0.1, 0.2}, Layout::Star), DomainError);
  EXPECT_THROW(synthesize_ordered_strings({PauliString::parse("II")}, {0.1}, Layout::Star), DomainError);
  EXPECT_THROW(synthesize_ordered_strings({xx, PauliString::parse("X")}, {0.1, 0.2}, Layout::Star), DomainError);
}

// Property: for random sequences the CNOT count matches the weight/distance
// formula and the circuit equals the ordered product of exponentials.
TEST(OrderedStrings, RandomSequencesMatchFormulaAndOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> length(1, 4), terms(1, 10);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = length(rng), k = terms(rng);
    std::vector<PauliString> strings;
    std::vector<std::string> text;
    std::vector<double> angles;
    for (int j = 0; j < k; ++j) {
      strings.push_back(testing::random_string(rng, n));
      text.push_back(strings.back().to_string());
      angles.push_back(testing::uniform(rng, -kPi, kPi));
    }
    int formula = strings.front().weight() + strings.back().weight();
    for (int j = 0; j + 1 < k; ++j) formula += hamming_distance(strings[j], strings[j + 1]);
    EXPECT_EQ(ordered_strings_cnot_cost(strings), formula);

    const Matrix target = oracle_product(text, angles);
    const auto ancilla = synthesize_ordered_strings(strings, angles, Layout::StarAncilla);
    EXPECT_EQ(ancilla.cnot_count, formula);
    EXPECT_EQ(ancilla.circuit.cnot_count(), formula);
    const Matrix full = circuit_unitary(ancilla.circuit);
    EXPECT_LT(phase_distance(ancilla_zero_block(full), target), 1e-9);

    // The full ancilla circuit is the product with Z on the ancilla appended.
    std::vector<std::string> with_ancilla;
    for (const auto& s : text) with_ancilla.push_back("Z" + s);
    EXPECT_LT(phase_distance(full, oracle_product(with_ancilla, angles)), 1e-9);

    const auto star = synthesize_ordered_strings(strings, angles, Layout::Star);
    EXPECT_EQ(star.circuit.n_qubits(), n);
    EXPECT_LT(phase_distance(circuit_unitary(star.circuit), target), 1e-9);
  }
}

TEST(TransitionZone, CompressedFormEqualsNaiveForm) {
  for (const Pauli from : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (const Pauli to : {Pauli::X, Pauli::Y, Pauli::Z}) {
      const Circuit compressed = transition_zone(from, to, true);
      const Circuit naive = transition_zone(from, to, false);
      EXPECT_EQ(naive.cnot_count(), 2);
      EXPECT_EQ(compressed.cnot_count(), from == to ? 0 : 1);
      EXPECT_LT(phase_distance(circuit_unitary(compressed), circuit_unitary(naive)), 1e-12)
          << to_char(from) << "->" << to_char(to);
    }
  }
}

TEST(GrayCode, Examples) {
  const auto two = gray_code_order(even_y_strings(2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(hamming_distance(two[0], two[1]), 2);

  EXPECT_THROW(gray_code_order({PauliString::parse("XX")}), DomainError);
  EXPECT_THROW(gray_code_order({PauliString::parse("XX"), PauliString::parse("XY")}), DomainError);
  EXPECT_THROW(gray_code_order({}), DomainError);
}

TEST(GrayCode, NeighboursDifferInTwoLetters) {
  for (int n = 2; n <= 10; ++n) {
    auto input = even_y_strings(n);
    std::reverse(input.begin(), input.end());
    const auto order = gray_code_order(input);
    ASSERT_EQ(order.size(), std::size_t{1} << (n - 1));
    int total = 0;
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      EXPECT_EQ(hamming_distance(order[j], order[j + 1]), 2);
      total += hamming_distance(order[j], order[j + 1]);
    }
    EXPECT_EQ(total, 2 * ((1 << (n - 1)) - 1));
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, even_y_strings(n));
  }
}

}  // namespace
}  // namespace yukawa
