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

#include "yukawa/circuit.hpp"
#include "yukawa/pauli.hpp"

namespace yukawa {

/// high (x) low, with `high` on qubit 1.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& high, const Eigen::Matrix2cd& low);

/// u = e^{i phase} RZ(after_z) RY(y) RZ(before_z).
struct ZyzAngles {
  double before_z = 0.0;
  double y = 0.0;
  double after_z = 0.0;
  double phase = 0.0;
};

ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u);

/// Appends `u` on `qubit` as Z-Y-Z rotations plus a global phase gate;
/// rotations with vanishing angle are omitted.
void append_single_qubit(Circuit& circuit, int qubit, const Eigen::Matrix2cd& u);

/// u = e^{i phase} (after_high (x) after_low) exp(i (cx XX + cy YY + cz ZZ))
///     (before_high (x) before_low), with every core coefficient folded into
/// (-pi/4, pi/4]. "high" acts on qubit 1.
struct KakDecomposition {
  Eigen::Matrix2cd before_high, before_low, after_high, after_low;
  std::array<double, 3> core{};
  double phase = 0.0;

  DenseMatrix reconstruct() const;
  /// Core coefficients with magnitude above `tol`.
  int interaction_terms(double tol = 1e-12) const;
};

KakDecomposition kak_decompose(const Eigen::Matrix4cd& u);

/// Two-qubit circuit for `u`: locals around the core, each non-zero core term
/// costing two CNOTs. Exact including the global phase.
Circuit kak_circuit(const Eigen::Matrix4cd& u);

}  // namespace yukawa
