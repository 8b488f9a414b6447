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

#include "yukawa/model.hpp"
#include "yukawa/statevector.hpp"

namespace yukawa {

struct ParticleNumbers {
  double boson = 0.0;
  double fermion = 0.0;
};

/// Boson occupation on qubits 1..N and fermion occupation (1 - <Z_0>) / 2.
ParticleNumbers particle_numbers(const Statevector& state, const ModelParams& params);

/// Closed-form <b^dag b>(t) for the one-boson register, evaluated from the
/// initial expectations of ZI, XZ and YZ (boson letter on qubit 1).
double analytic_boson_number(const Statevector& initial, double boson_mass, double coupling, double t);

/// Initial state kept as its two factors.
struct ProductState {
  Statevector boson;
  Statevector fermion;

  /// Boson register on the upper qubits, fermion on qubit 0.
  Statevector full() const { return Statevector::tensor(boson, fermion); }
};

/// Splits a full-register state into boson and fermion factors; entangled
/// input is rejected.
ProductState factor_product_state(const Statevector& state, double tol = 1e-10);

/// True when the boson occupation does not depend on the fermion occupation:
/// either <Z>_f vanishes or the boson factor has definite Fock parity. With
/// one boson qubit the parity condition is <X>_b = <Y>_b = 0.
bool noninteracting_predicate(const ProductState& initial, double tol = 1e-10);
bool noninteracting_predicate(const Statevector& initial, double tol = 1e-10);

}  // namespace yukawa
