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

#include <numbers>

#include "support.hpp"
#include "yukawa/errors.hpp"
#include "yukawa/kak.hpp"
#include "yukawa/statevector.hpp"

namespace yukawa {
namespace {

using testing::Matrix;

bool is_unitary(const Matrix& u, double tol = 1e-10) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm() < tol;
}

TEST(Zyz, ReconstructsRandomSingleQubitUnitaries) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix2cd u = testing::random_unitary(rng, 2);
    const auto a = zyz_decompose(u);
    const Eigen::Matrix2cd rebuilt = std::exp(Complex{0, a.phase}) * Gate::rz(0, a.after_z).matrix() *
                                     Gate::ry(0, a.y).matrix() * Gate::rz(0, a.before_z).matrix();
    EXPECT_LT((rebuilt - u).norm(), 1e-12);

    Circuit c(1);
    append_single_qubit(c, 0, u);
    EXPECT_LT((circuit_unitary(c) - Matrix(u)).norm(), 1e-12);
  }
}

TEST(Zyz, DiagonalAndAntiDiagonalInputs) {
  EXPECT_NEAR(zyz_decompose(Gate::z(0).matrix()).y, 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zyz_decompose(Gate::x(0).matrix()).y), std::numbers::pi, 1e-15);
  Circuit c(1);
  append_single_qubit(c, 0, Eigen::Matrix2cd::Identity());
  EXPECT_EQ(c.size(), 0u);
}

TEST(Kak, KronOrdersHighFactorFirst) {
  const Eigen::Matrix2cd x = Gate::x(0).matrix(), z = Gate::z(0).matrix();
  EXPECT_LT((Matrix(kron(x, z)) - testing::string_matrix("XZ")).norm(), 1e-15);
}

// Property: every Haar-random two-qubit unitary splits into unitary local
// factors around a core with coefficients in (-pi/4, pi/4].
TEST(Kak, RandomUnitariesReconstruct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix4cd u = testing::random_unitary(rng, 4);
    const auto k = kak_decompose(u);
    EXPECT_LT((k.reconstruct() - Matrix(u)).norm(), 1e-9);
    for (const auto* local : {&k.before_high, &k.before_low, &k.after_high, &k.after_low})
      EXPECT_TRUE(is_unitary(*local));
    for (const double c : k.core) {
      EXPECT_GT(c, -std::numbers::pi / 4 - 1e-12);
      EXPECT_LE(c, std::numbers::pi / 4 + 1e-12);
    }
    EXPECT_EQ(k.interaction_terms(), 3);
  }
}

TEST(Kak, CoreOfKnownInteractions) {
  // exp(i 0.3 ZZ) has a single core term.
  const Matrix zz = testing::string_matrix("ZZ");
  const auto k = kak_decompose(testing::dense_propagator(zz, -0.3));
  EXPECT_EQ(k.interaction_terms(), 1);
  EXPECT_NEAR(std::abs(k.core[0]) + std::abs(k.core[1]) + std::abs(k.core[2]), 0.3, 1e-10);

  const Eigen::Matrix4cd local = kron(Gate::h(0).matrix(), Gate::s(0).matrix());
  EXPECT_EQ(kak_decompose(local).interaction_terms(), 0);
  EXPECT_EQ(kak_circuit(local).cnot_count(), 0);
}

TEST(Kak, CircuitRealizesInputWithTwoCnotsPerCoreTerm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Matrix4cd u = testing::random_unitary(rng, 4);
    const Circuit c = kak_circuit(u);
    EXPECT_LT((circuit_unitary(c) - Matrix(u)).norm(), 1e-9);
    EXPECT_EQ(c.cnot_count(), 2 * kak_decompose(u).interaction_terms());
  }
}

TEST(Kak, RejectsNonUnitaryInput) {
  EXPECT_THROW(kak_decompose(Eigen::Matrix4cd::Ones()), DomainError);
}

}  // namespace
}  // namespace yukawa
