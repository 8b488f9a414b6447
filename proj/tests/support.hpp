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

// Oracles and random generators shared by the test binaries. Everything here
// is built without the library's own dense helpers so it can check them.

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "yukawa/pauli.hpp"
#include "yukawa/statevector.hpp"

namespace yukawa::testing {

using Matrix = Eigen::MatrixXcd;

inline Matrix pauli_matrix(char c) {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Kronecker product of the letters as printed, leftmost letter most significant.
inline Matrix string_matrix(const std::string& text) {
  Matrix m = Matrix::Identity(1, 1);
  for (const char c : text) m = kron(m, pauli_matrix(c));
  return m;
}

inline Matrix sum_matrix(const PauliSum& op) {
  const auto dim = Eigen::Index{1} << op.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [s, c] : op.terms()) m += c * string_matrix(s.to_string());
  return m;
}

/// exp(-i h t) by Pade scaling and squaring.
inline Matrix dense_propagator(const Matrix& h, double t) {
  const Matrix g = Complex{0.0, -t} * h;
  return g.exp();
}

/// Truncated ladder operator with <k+1| a^dag |k> = sqrt(k+1), Fock index = basis index.
inline Matrix ladder_creation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) a(k + 1, k) = std::sqrt(static_cast<double>(k + 1));
  return a;
}

inline double phase_invariant_distance(const Matrix& a, const Matrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (a - phase * b).norm();
}

inline Eigen::VectorXcd random_amplitudes(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v(k) = Complex{normal(rng), normal(rng)};
  return v / v.norm();
}

inline Statevector random_state(std::mt19937_64& rng, int n_qubits) {
  return Statevector::from_amplitudes(random_amplitudes(rng, Eigen::Index{1} << n_qubits));
}

/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
inline Matrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline PauliString random_string(std::mt19937_64& rng, int n_qubits, bool allow_identity = false) {
  std::uniform_int_distribution<int> letter(0, 3);
  for (;;) {
    std::vector<Pauli> ops(static_cast<std::size_t>(n_qubits));
    for (auto& p : ops) p = static_cast<Pauli>(letter(rng));
    PauliString s(std::move(ops));
    if (allow_identity || !s.is_identity()) return s;
  }
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace yukawa::testing
