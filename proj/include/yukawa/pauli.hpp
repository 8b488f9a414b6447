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

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace yukawa {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Largest register for which dense 2^n x 2^n matrices are materialized.
inline constexpr int kMaxDenseQubits = 12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis on a fixed number of qubits.
///
/// Position 0 is qubit 0, the least-significant bit of a basis index. Text
/// renders the highest qubit first, so "XZ" is X on qubit 1 and Z on qubit 0.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> ops);
  /// All-identity string on `n_qubits` qubits.
  static PauliString identity(int n_qubits);
  /// Parses the highest-qubit-first text form, e.g. "XIZ".
  static PauliString parse(std::string_view text);

  int size() const { return static_cast<int>(ops_.size()); }
  Pauli operator[](int qubit) const { return ops_.at(static_cast<std::size_t>(qubit)); }
  const std::vector<Pauli>& ops() const { return ops_; }

  PauliString with(int qubit, Pauli p) const;
  /// `high` occupies the upper qubits of the result, `low` the lower ones.
  static PauliString concat(const PauliString& high, const PauliString& low);

  int weight() const;
  bool is_identity() const { return weight() == 0; }
  std::vector<int> support() const;

  /// Bit masks used by the basis-state action P|j> = phase(j) |j ^ flip_mask>.
  std::uint64_t flip_mask() const;
  std::uint64_t phase_mask() const;
  int y_count() const;

  std::string to_string() const;
  /// Lowest qubit first; the reading order used for boson-register listings
  /// where Fock digit 0 is written leftmost.
  std::string to_string_low_first() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Lexicographic over the text form (descending qubit index, I < X < Y < Z).
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b);

 private:
  std::vector<Pauli> ops_;
};

int hamming_distance(const PauliString& a, const PauliString& b);
int hamming_weight(const PauliString& p);

struct PauliTerm {
  Complex coefficient;
  PauliString string;
};

/// Sum of Pauli strings with complex coefficients, kept canonical: one entry
/// per string, sorted, with negligible coefficients dropped.
class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-14;

  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, const std::vector<PauliTerm>& terms);
  static PauliSum single(Complex coefficient, const PauliString& string);

  int n_qubits() const { return n_qubits_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<PauliString, Complex>& terms() const { return terms_; }
  Complex coefficient(const PauliString& s) const;
  std::vector<PauliString> support() const;

  void add(Complex coefficient, const PauliString& string);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a += b * Complex{-1.0}; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }

  PauliSum adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  /// `high` on the upper qubits, `low` on the lower ones.
  static PauliSum tensor(const PauliSum& high, const PauliSum& low);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  void prune();

  int n_qubits_;
  std::map<PauliString, Complex> terms_;
};

/// Dense matrix in the computational basis, basis index bit j = qubit j.
DenseMatrix to_matrix(const PauliSum& op);

void to_json(nlohmann::json& j, const PauliSum& op);
/// `n_qubits` may be 0 to infer the width from the first term; an empty list
/// needs it explicitly.
PauliSum pauli_sum_from_json(const nlohmann::json& j, int n_qubits = 0);

}  // namespace yukawa
