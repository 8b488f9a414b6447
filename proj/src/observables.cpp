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

#include "yukawa/observables.hpp"

#include <cmath>
#include <complex>

#include "yukawa/errors.hpp"

namespace yukawa {

ParticleNumbers particle_numbers(const Statevector& state, const ModelParams& params) {
  if (state.n_qubits() != params.n_qubits())
    throw DomainError("particle_numbers: state has " + std::to_string(state.n_qubits()) + " qubits, model needs " +
                      std::to_string(params.n_qubits()));
  ParticleNumbers out;
  const auto& amps = state.amplitudes();
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    const double p = std::norm(amps(k));
    out.boson += p * static_cast<double>(k >> 1);
    if (k & 1) out.fermion += p;
  }
  return out;
}

double analytic_boson_number(const Statevector& initial, double boson_mass, double coupling, double t) {
  if (initial.n_qubits() != 2) throw DomainError("analytic_boson_number needs the one-boson register");
  const double m = boson_mass, eta = coupling;
  const double w2 = m * m + eta * eta;
  const double w = std::sqrt(w2);
  const auto ev = [&](const char* s) { return expectation(initial, PauliSum::single(1.0, PauliString::parse(s))); };
  const double c = std::cos(w * t), s = std::sin(w * t);
  return 0.5 * (1.0 - (m * m + eta * eta * c) / w2 * ev("ZI") - m * eta * (1.0 - c) / w2 * ev("XZ") +
                eta * s / w * ev("YZ"));
}

ProductState factor_product_state(const Statevector& state, double tol) {
  if (state.n_qubits() < 2) throw DomainError("product state needs a boson and a fermion qubit");
  const auto& amps = state.amplitudes();
  const Eigen::Index half = amps.size() / 2;
  // Rows: boson index, columns: fermion bit.
  Eigen::MatrixXcd coeffs(half, 2);
  for (Eigen::Index b = 0; b < half; ++b) {
    coeffs(b, 0) = amps(2 * b);
    coeffs(b, 1) = amps(2 * b + 1);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeffs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues()(1) > tol) throw DomainError("initial state is entangled between boson and fermion");
  Eigen::VectorXcd boson = svd.matrixU().col(0);
  Eigen::VectorXcd fermion = svd.matrixV().col(0).conjugate() * svd.singularValues()(0);
  boson /= boson.norm();
  fermion /= fermion.norm();
  return {Statevector::from_amplitudes(std::move(boson)), Statevector::from_amplitudes(std::move(fermion))};
}

bool noninteracting_predicate(const ProductState& initial, double tol) {
  if (initial.fermion.n_qubits() != 1) throw DomainError("fermion factor must be a single qubit");
  const auto& f = initial.fermion.amplitudes();
  const double z_fermion = std::norm(f(0)) - std::norm(f(1));
  if (std::abs(z_fermion) <= tol) return true;
  double even = 0.0, odd = 0.0;
  const auto& b = initial.boson.amplitudes();
  for (Eigen::Index k = 0; k < b.size(); ++k) (k & 1 ? odd : even) += std::norm(b(k));
  return std::min(even, odd) <= tol;
}

bool noninteracting_predicate(const Statevector& initial, double tol) {
  return noninteracting_predicate(factor_product_state(initial), tol);
}

}  // namespace yukawa
