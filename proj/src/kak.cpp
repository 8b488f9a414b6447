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

#include "yukawa/kak.hpp"

#include <cmath>
#include <numbers>

#include "yukawa/errors.hpp"
#include "yukawa/synthesis.hpp"

namespace yukawa {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEpsilon = 1e-14;

const Eigen::Matrix4cd& magic_basis() {
  static const Eigen::Matrix4cd basis = [] {
    const Complex i{0.0, 1.0};
    Eigen::Matrix4cd b;
    b << 1, 0, 0, i, 0, i, 1, 0, 0, i, -1, 0, 1, 0, 0, -i;
    return Eigen::Matrix4cd(b / std::sqrt(2.0));
  }();
  return basis;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Complex{0, -1}, Complex{0, 1}, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

/// Splits a 4x4 tensor product into its qubit-1 and qubit-0 factors.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> factor_local(const Eigen::Matrix4cd& k) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (const double n = k.block<2, 2>(2 * i, 2 * j).norm(); n > best) best = n, bi = i, bj = j;
  Eigen::Matrix2cd low = k.block<2, 2>(2 * bi, 2 * bj);
  low /= std::sqrt(low.determinant());
  Eigen::Matrix2cd high;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) high(i, j) = (low.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
  if ((kron(high, low) - k).norm() > 1e-9) throw InvariantError("KAK local factor is not a tensor product");
  return {high, low};
}

/// Orthogonal P with P^T m P diagonal for a complex symmetric unitary m.
Eigen::Matrix4d real_diagonalizer(const Eigen::Matrix4cd& m) {
  for (const double r : {0.5772156649, 1.4142135623, 2.7182818284, 0.3183098861, 4.6692016091}) {
    const Eigen::Matrix4d mixed = m.real() + r * m.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(mixed);
    Eigen::Matrix4d p = eig.eigenvectors();
    Eigen::Matrix4cd d = p.transpose().cast<Complex>() * m * p.cast<Complex>();
    d.diagonal().setZero();
    if (d.norm() < 1e-10) {
      if (p.determinant() < 0) p.col(0) *= -1.0;
      return p;
    }
  }
  throw InvariantError("KAK: failed to diagonalize the magic-basis square");
}

}  // namespace

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& high, const Eigen::Matrix2cd& low) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = high(i, j) * low;
  return out;
}

ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u) {
  const Complex det = u.determinant();
  if (std::abs(std::abs(det) - 1.0) > 1e-9) throw DomainError("zyz_decompose: matrix is not unitary");
  ZyzAngles out;
  out.phase = std::arg(det) / 2.0;
  const Eigen::Matrix2cd v = u * std::exp(Complex{0.0, -out.phase});
  out.y = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  const double sum = std::abs(v(1, 1)) > 1e-12 ? 2.0 * std::arg(v(1, 1)) : 0.0;
  const double diff = std::abs(v(1, 0)) > 1e-12 ? 2.0 * std::arg(v(1, 0)) : 0.0;
  out.after_z = (sum + diff) / 2.0;
  out.before_z = (sum - diff) / 2.0;
  return out;
}

void append_single_qubit(Circuit& circuit, int qubit, const Eigen::Matrix2cd& u) {
  const ZyzAngles a = zyz_decompose(u);
  if (std::abs(a.before_z) > kAngleEpsilon) circuit.add(Gate::rz(qubit, a.before_z));
  if (std::abs(a.y) > kAngleEpsilon) circuit.add(Gate::ry(qubit, a.y));
  if (std::abs(a.after_z) > kAngleEpsilon) circuit.add(Gate::rz(qubit, a.after_z));
  if (std::abs(a.phase) > kAngleEpsilon) circuit.add(Gate::global_phase(a.phase));
}

DenseMatrix KakDecomposition::reconstruct() const {
  const Complex i{0.0, 1.0};
  Eigen::Matrix4cd generator = Eigen::Matrix4cd::Zero();
  const Pauli axes[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int k = 0; k < 3; ++k) generator += core[k] * kron(pauli_matrix(axes[k]), pauli_matrix(axes[k]));
  // Every XX, YY, ZZ is diagonal in the magic basis.
  const Eigen::Matrix4cd& b = magic_basis();
  const Eigen::Matrix4cd diag = b.adjoint() * generator * b;
  Eigen::Matrix4cd core_u = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) core_u(k, k) = std::exp(i * diag(k, k).real());
  core_u = b * core_u * b.adjoint();
  return std::exp(i * phase) * kron(after_high, after_low) * core_u * kron(before_high, before_low);
}

int KakDecomposition::interaction_terms(double tol) const {
  int n = 0;
  for (const double c : core) n += std::abs(c) > tol;
  return n;
}

KakDecomposition kak_decompose(const Eigen::Matrix4cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).norm() > 1e-9)
    throw DomainError("kak_decompose: matrix is not unitary");
  const Complex i{0.0, 1.0};
  KakDecomposition out;
  out.phase = std::arg(u.determinant()) / 4.0;
  const Eigen::Matrix4cd special = u * std::exp(-i * out.phase);

  const Eigen::Matrix4cd& b = magic_basis();
  const Eigen::Matrix4cd up = b.adjoint() * special * b;
  const Eigen::Matrix4cd square = up.transpose() * up;
  const Eigen::Matrix4d p = real_diagonalizer(square);
  const Eigen::Matrix4cd pc = p.cast<Complex>();
  const Eigen::Matrix4cd d = pc.transpose() * square * pc;

  std::array<double, 4> half{};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) total += half[k] = std::arg(d(k, k)) / 2.0;
  if (std::cos(total) < 0.0) half[0] += kPi;

  Eigen::Matrix4cd half_inv = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) half_inv(k, k) = std::exp(-i * half[k]);
  const Eigen::Matrix4cd left = up * pc * half_inv;
  if (left.imag().norm() > 1e-9) throw InvariantError("KAK: left factor is not real");
  const Eigen::Matrix4cd left_real = left.real().cast<Complex>();

  std::tie(out.after_high, out.after_low) = factor_local(b * left_real * b.adjoint());
  std::tie(out.before_high, out.before_low) = factor_local(b * pc.transpose() * b.adjoint());

  // half[k] = g + cx sx_k + cy sy_k + cz sz_k with s the magic-basis signs.
  Eigen::Matrix4d signs;
  const Pauli axes[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int k = 0; k < 4; ++k) {
    signs(k, 0) = 1.0;
    for (int a = 0; a < 3; ++a) {
      const Eigen::Matrix4cd pp = kron(pauli_matrix(axes[a]), pauli_matrix(axes[a]));
      signs(k, a + 1) = (b.col(k).adjoint() * pp * b.col(k))(0, 0).real();
    }
  }
  const Eigen::Vector4d rhs(half[0], half[1], half[2], half[3]);
  const Eigen::Vector4d coeffs = signs.partialPivLu().solve(rhs);
  out.phase += coeffs(0);
  for (int a = 0; a < 3; ++a) {
    double c = coeffs(a + 1);
    const Eigen::Matrix2cd pm = pauli_matrix(axes[a]);
    // exp(i (c + pi/2) PP) = i PP exp(i c PP); the PP factor joins the outer locals.
    while (c > kPi / 4 + 1e-13) {
      c -= kPi / 2;
      out.after_high = out.after_high * pm;
      out.after_low = out.after_low * pm;
      out.phase += kPi / 2;
    }
    while (c <= -kPi / 4 + 1e-13) {
      c += kPi / 2;
      out.after_high = out.after_high * pm;
      out.after_low = out.after_low * pm;
      out.phase -= kPi / 2;
    }
    out.core[static_cast<std::size_t>(a)] = c;
  }
  if ((out.reconstruct() - u).norm() > 1e-9) throw InvariantError("KAK reconstruction does not match the input");
  return out;
}

Circuit kak_circuit(const Eigen::Matrix4cd& u) {
  const KakDecomposition k = kak_decompose(u);
  Circuit c(2);
  append_single_qubit(c, 1, k.before_high);
  append_single_qubit(c, 0, k.before_low);
  const Pauli axes[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int a = 0; a < 3; ++a) {
    const double coeff = k.core[static_cast<std::size_t>(a)];
    if (std::abs(coeff) <= 1e-12) continue;
    // exp(i c PP) = exp(-i (-2c)/2 PP)
    append_pauli_rotation(c, PauliString(std::vector<Pauli>{axes[a], axes[a]}), -2.0 * coeff);
  }
  append_single_qubit(c, 1, k.after_high);
  append_single_qubit(c, 0, k.after_low);
  if (std::abs(k.phase) > kAngleEpsilon) c.add(Gate::global_phase(k.phase));
  return c;
}

}  // namespace yukawa
