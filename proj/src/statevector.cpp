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

#include "yukawa/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

void require_width(int n_qubits, int cap, const char* what) {
  if (n_qubits < 1) throw DomainError(std::string(what) + ": need at least one qubit");
  if (n_qubits > cap)
    throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) + " qubits exceeds the cap of " +
                        std::to_string(cap));
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  require_width(n_qubits, kMaxStateQubits, "statevector");
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension()));
  amps_(0) = 1.0;
}

Statevector::Statevector(int n_qubits, Eigen::VectorXcd amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension()) throw DomainError("basis index out of range");
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(Eigen::VectorXcd amplitudes) {
  const auto dim = static_cast<std::uint64_t>(amplitudes.size());
  if (dim < 2 || !std::has_single_bit(dim)) throw DomainError("amplitude count must be a power of two >= 2");
  const int n = std::countr_zero(dim);
  require_width(n, kMaxStateQubits, "statevector");
  if (!amplitudes.allFinite()) throw DomainError("amplitudes must be finite");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTolerance) throw DomainError("state is not normalized");
  return Statevector(n, std::move(amplitudes));
}

Statevector Statevector::tensor(const Statevector& high, const Statevector& low) {
  const int n = high.n_qubits_ + low.n_qubits_;
  require_width(n, kMaxStateQubits, "statevector");
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(std::uint64_t{1} << n));
  const auto low_dim = static_cast<Eigen::Index>(low.dimension());
  for (Eigen::Index h = 0; h < high.amps_.size(); ++h) amps.segment(h * low_dim, low_dim) = high.amps_(h) * low.amps_;
  return Statevector(n, std::move(amps));
}

void Statevector::apply(const Gate& gate) {
  const auto dim = static_cast<std::uint64_t>(amps_.size());
  switch (gate.kind) {
    case GateKind::GLOBAL_PHASE:
      amps_ *= std::exp(Complex{0.0, gate.angle});
      return;
    case GateKind::CNOT: {
      if (gate.control >= n_qubits_ || gate.target >= n_qubits_) throw DomainError("CNOT outside the register");
      const std::uint64_t cbit = std::uint64_t{1} << gate.control;
      const std::uint64_t tbit = std::uint64_t{1} << gate.target;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cbit) && !(i & tbit))
          std::swap(amps_(static_cast<Eigen::Index>(i)), amps_(static_cast<Eigen::Index>(i | tbit)));
      return;
    }
    default: {
      if (gate.target >= n_qubits_) throw DomainError("gate outside the register");
      const Eigen::Matrix2cd m = gate.matrix();
      const std::uint64_t bit = std::uint64_t{1} << gate.target;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | bit);
        const Complex a0 = amps_(i0), a1 = amps_(i1);
        amps_(i0) = m(0, 0) * a0 + m(0, 1) * a1;
        amps_(i1) = m(1, 0) * a0 + m(1, 1) * a1;
      }
    }
  }
}

void Statevector::apply(const Circuit& circuit) {
  if (circuit.n_qubits() != n_qubits_)
    throw DomainError("circuit width " + std::to_string(circuit.n_qubits()) + " does not match state width " +
                      std::to_string(n_qubits_));
  for (const auto& g : circuit.gates()) apply(g);
  if (std::abs(norm() - 1.0) > kNormTolerance) throw InvariantError("circuit application broke normalization");
}

Statevector apply_circuit(const Circuit& circuit, Statevector state) {
  state.apply(circuit);
  return state;
}

DenseMatrix circuit_unitary(const Circuit& circuit) {
  require_width(circuit.n_qubits(), kMaxDenseQubits, "circuit_unitary");
  const std::uint64_t dim = std::uint64_t{1} << circuit.n_qubits();
  DenseMatrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    auto s = Statevector::basis(circuit.n_qubits(), col);
    for (const auto& g : circuit.gates()) s.apply(g);
    u.col(static_cast<Eigen::Index>(col)) = s.amplitudes();
  }
  return u;
}

double phase_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("phase_distance: shape mismatch");
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (a - phase * b).norm();
}

Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& psi) {
  static const Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto flip = p.flip_mask();
  const auto phase = p.phase_mask();
  const Complex base = kIPow[p.y_count() % 4];
  Eigen::VectorXcd out(psi.size());
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(psi.size()); ++j) {
    const double sign = (std::popcount(j & phase) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(j ^ flip)) = sign * base * psi(static_cast<Eigen::Index>(j));
  }
  return out;
}

double expectation(const Statevector& state, const PauliSum& observable) {
  if (observable.n_qubits() != state.n_qubits()) throw DomainError("observable width does not match state");
  if (!observable.is_hermitian()) throw DomainError("expectation needs a Hermitian observable");
  Complex total = 0.0;
  for (const auto& [s, c] : observable.terms())
    total += c * state.amplitudes().dot(apply_pauli(s, state.amplitudes()));
  if (std::abs(total.imag()) > 1e-10) throw InvariantError("Hermitian expectation has an imaginary part");
  return total.real();
}

Propagator::Propagator(const PauliSum& hamiltonian) : n_qubits_(hamiltonian.n_qubits()) {
  if (!hamiltonian.is_hermitian()) throw DomainError("propagator needs a Hermitian Hamiltonian");
  const DenseMatrix h = to_matrix(hamiltonian);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h);
  if (eig.info() != Eigen::Success) throw InvariantError("Hermitian eigendecomposition failed");
  energies_ = eig.eigenvalues();
  basis_ = eig.eigenvectors();
}

DenseMatrix Propagator::at(double t) const {
  Eigen::VectorXcd phases(energies_.size());
  for (Eigen::Index k = 0; k < energies_.size(); ++k) phases(k) = std::exp(Complex{0.0, -energies_(k) * t});
  return basis_ * phases.asDiagonal() * basis_.adjoint();
}

Statevector Propagator::evolve(const Statevector& state, double t) const {
  if (state.n_qubits() != n_qubits_) throw DomainError("state width does not match the propagator");
  Eigen::VectorXcd coeffs = basis_.adjoint() * state.amplitudes();
  for (Eigen::Index k = 0; k < energies_.size(); ++k) coeffs(k) *= std::exp(Complex{0.0, -energies_(k) * t});
  Eigen::VectorXcd out = basis_ * coeffs;
  out /= out.norm();
  return Statevector::from_amplitudes(std::move(out));
}

DenseMatrix exact_propagator(const PauliSum& hamiltonian, double t) { return Propagator(hamiltonian).at(t); }

}  // namespace yukawa
