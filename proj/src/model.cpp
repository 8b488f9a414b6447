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

#include "yukawa/model.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

// Expanding b^dag term by term costs 2^N strings per Fock level.
constexpr int kMaxLadderQubits = 10;
constexpr int kMaxStringQubits = 20;

void require_register(int n_qubits, int cap, const char* what) {
  if (n_qubits < 1) throw DomainError(std::string(what) + ": boson register needs at least one qubit");
  if (n_qubits > cap)
    throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) +
                        " qubits exceeds the cap of " + std::to_string(cap));
}

PauliSum single_qubit(Complex ci, Complex cx, Complex cy, Complex cz) {
  return PauliSum(1, {{ci, PauliString({Pauli::I})},
                      {cx, PauliString({Pauli::X})},
                      {cy, PauliString({Pauli::Y})},
                      {cz, PauliString({Pauli::Z})}});
}

}  // namespace

void ModelParams::validate() const {
  if (!(boson_mass > 0.0) || !std::isfinite(boson_mass)) throw DomainError("boson mass m must be positive");
  if (!(fermion_mass > 0.0) || !std::isfinite(fermion_mass))
    throw DomainError("fermion mass M must be positive");
  if (!std::isfinite(coupling)) throw DomainError("coupling eta must be finite");
  if (n_boson_qubits < 1) throw DomainError("boson register needs at least one qubit");
  if (n_boson_qubits > 40) throw DomainError("boson register width out of range");
}

double ModelParams::reference_period() const {
  return 2.0 * std::numbers::pi / std::hypot(boson_mass, coupling);
}

double effective_coupling(double boson_mass, double g, double beta) {
  if (!(boson_mass > 0.0)) throw DomainError("boson mass must be positive");
  if (!(beta > 0.0)) throw DomainError("velocity factor beta must be positive");
  return 4.0 * boson_mass * g * std::pow(beta, 1.5);
}

int qubits_for_cutoff(std::int64_t cutoff) {
  if (cutoff < 1) throw DomainError("Fock cutoff must be at least 1");
  const auto levels = static_cast<std::uint64_t>(cutoff) + 1;
  if (!std::has_single_bit(levels))
    throw DomainError("Fock cutoff " + std::to_string(cutoff) + " is not of the form 2^N - 1");
  return std::countr_zero(levels);
}

PauliSum boson_number_operator(int n_qubits) {
  require_register(n_qubits, 62, "boson_number_operator");
  PauliSum out(n_qubits);
  const auto id = PauliString::identity(n_qubits);
  for (int j = 0; j < n_qubits; ++j) {
    const double w = 0.5 * std::ldexp(1.0, j);
    out.add(w, id);
    out.add(-w, id.with(j, Pauli::Z));
  }
  return out;
}

PauliSum boson_creation_operator(int n_qubits) {
  require_register(n_qubits, kMaxLadderQubits, "boson_creation_operator");
  const std::int64_t cutoff = (std::int64_t{1} << n_qubits) - 1;
  const Complex i{0.0, 1.0};
  PauliSum out(n_qubits);
  for (std::int64_t k = 1; k <= cutoff; ++k) {
    // Factor j: projector on the current digit once a lower digit of k is
    // set, otherwise a raising (digit set) or lowering (digit clear) flip.
    PauliSum product = PauliSum::single(1.0, PauliString::identity(1));
    bool lower_bit_set = false;
    for (int j = 0; j < n_qubits; ++j) {
      const bool bit = (k >> j) & 1;
      const double sign = bit ? -1.0 : 1.0;
      PauliSum factor = lower_bit_set ? single_qubit(1.0, 0.0, 0.0, sign) : single_qubit(0.0, 1.0, sign * i, 0.0);
      product = j == 0 ? factor : PauliSum::tensor(factor, product);
      lower_bit_set = lower_bit_set || bit;
    }
    out += product * Complex{std::sqrt(static_cast<double>(k)) * std::ldexp(1.0, -n_qubits)};
  }
  return out;
}

PauliSum boson_annihilation_operator(int n_qubits) { return boson_creation_operator(n_qubits).adjoint(); }

PauliSum boson_displacement(int n_qubits) {
  const PauliSum creation = boson_creation_operator(n_qubits);
  PauliSum out = creation + creation.adjoint();
  if (!out.is_hermitian()) throw InvariantError("b + b^dag came out non-Hermitian");
  return out;
}

PauliSum fermion_charge_operator() { return PauliSum::single(-1.0, PauliString::parse("Z")); }

PauliSum fermion_charge_operator_unreduced() {
  return PauliSum(2, {{-0.5, PauliString::parse("IZ")}, {-0.5, PauliString::parse("ZI")}});
}

PauliSum fermion_number_operator() {
  return PauliSum(1, {{0.5, PauliString::parse("I")}, {-0.5, PauliString::parse("Z")}});
}

PauliSum embed_boson_operator(const PauliSum& boson_op) {
  return PauliSum::tensor(boson_op, PauliSum::single(1.0, PauliString::identity(1)));
}

QubitHamiltonian build_hamiltonian(const ModelParams& params) {
  params.validate();
  const int n = params.n_qubits();
  const auto id = PauliString::identity(n);

  PauliSum free(n);
  free.add(-params.fermion_mass, id.with(0, Pauli::Z));
  for (int j = 0; j < params.n_boson_qubits; ++j)
    free.add(-0.5 * params.boson_mass * std::ldexp(1.0, j), id.with(j + 1, Pauli::Z));

  PauliSum interaction(n);
  if (params.coupling != 0.0) {
    interaction = PauliSum::tensor(boson_displacement(params.n_boson_qubits), fermion_charge_operator()) *
                  Complex{0.5 * params.coupling};
  }
  if (!free.is_hermitian() || !interaction.is_hermitian())
    throw InvariantError("qubit Hamiltonian is not Hermitian");
  return {std::move(free), std::move(interaction)};
}

std::vector<PauliString> even_y_strings(int length) {
  require_register(length, kMaxStringQubits, "even_y_strings");
  std::vector<PauliString> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<Pauli> ops(static_cast<std::size_t>(length), Pauli::X);
    for (int q = 0; q < length; ++q)
      if ((mask >> q) & 1) ops[static_cast<std::size_t>(q)] = Pauli::Y;
    out.emplace_back(std::move(ops));
  }
  return out;
}

std::vector<PauliString> generate_pauli_strings(int n_qubits) {
  require_register(n_qubits, kMaxStringQubits, "generate_pauli_strings");
  std::vector<PauliString> current{PauliString::parse("X")};
  for (int width = 1; width < n_qubits; ++width) {
    std::vector<PauliString> next;
    next.reserve(current.size() * 2 + (std::size_t{1} << width));
    for (Pauli top : {Pauli::I, Pauli::Z})
      for (const auto& s : current) next.push_back(PauliString::concat(PauliString({top}), s));
    for (auto& s : even_y_strings(width + 1)) next.push_back(std::move(s));
    current = std::move(next);
  }
  return current;
}

std::int64_t string_count(int n_qubits) {
  if (n_qubits < 1) throw DomainError("string_count needs N >= 1");
  if (n_qubits > 60) throw DomainError("string_count overflows for N > 60");
  return static_cast<std::int64_t>(n_qubits) << (n_qubits - 1);
}

}  // namespace yukawa
