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

#include "yukawa/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "yukawa/errors.hpp"

namespace yukawa {

char to_char(Pauli p) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw DomainError(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw DomainError("Pauli string must act on at least one qubit");
  if (ops_.size() > 64) throw DomainError("Pauli strings are limited to 64 qubits");
}

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits < 1) throw DomainError("Pauli string must act on at least one qubit");
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I));
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> ops;
  ops.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) ops.push_back(pauli_from_char(*it));
  return PauliString(std::move(ops));
}

PauliString PauliString::with(int qubit, Pauli p) const {
  if (qubit < 0 || qubit >= size()) throw DomainError("qubit index out of range");
  auto ops = ops_;
  ops[static_cast<std::size_t>(qubit)] = p;
  return PauliString(std::move(ops));
}

PauliString PauliString::concat(const PauliString& high, const PauliString& low) {
  auto ops = low.ops_;
  ops.insert(ops.end(), high.ops_.begin(), high.ops_.end());
  return PauliString(std::move(ops));
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < size(); ++q)
    if (ops_[static_cast<std::size_t>(q)] != Pauli::I) out.push_back(q);
  return out;
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t mask = 0;
  for (int q = 0; q < size(); ++q) {
    const Pauli p = (*this)[q];
    if (p == Pauli::X || p == Pauli::Y) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

std::uint64_t PauliString::phase_mask() const {
  std::uint64_t mask = 0;
  for (int q = 0; q < size(); ++q) {
    const Pauli p = (*this)[q];
    if (p == Pauli::Z || p == Pauli::Y) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(ops_.begin(), ops_.end(), Pauli::Y));
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) s.push_back(to_char(*it));
  return s;
}

std::string PauliString::to_string_low_first() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(to_char(p));
  return s;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (int q = a.size() - 1; q >= 0; --q) {
    if (a[q] != b[q]) return static_cast<int>(a[q]) <=> static_cast<int>(b[q]);
  }
  return std::strong_ordering::equal;
}

int hamming_distance(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw DomainError("Hamming distance needs strings of equal length");
  int d = 0;
  for (int q = 0; q < a.size(); ++q) d += a[q] != b[q] ? 1 : 0;
  return d;
}

int hamming_weight(const PauliString& p) { return p.weight(); }

// PauliSum

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw DomainError("PauliSum must act on at least one qubit");
}

PauliSum::PauliSum(int n_qubits, const std::vector<PauliTerm>& terms) : PauliSum(n_qubits) {
  for (const auto& t : terms) add(t.coefficient, t.string);
  prune();
}

PauliSum PauliSum::single(Complex coefficient, const PauliString& string) {
  PauliSum s(string.size());
  s.add(coefficient, string);
  s.prune();
  return s;
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

std::vector<PauliString> PauliSum::support() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back(s);
  return out;
}

void PauliSum::add(Complex coefficient, const PauliString& string) {
  if (!std::isfinite(coefficient.real()) || !std::isfinite(coefficient.imag()))
    throw DomainError("Pauli coefficient must be finite");
  if (string.size() != n_qubits_) throw DomainError("Pauli string length does not match the sum");
  auto [it, inserted] = terms_.try_emplace(string, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
  } else if (std::abs(coefficient) < kDropTolerance) {
    terms_.erase(it);
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw DomainError("cannot add Pauli sums of different width");
  for (const auto& [s, c] : other.terms_) add(c, s);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [s, c] : terms_) c *= scale;
  prune();
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& [s, c] : out.terms_) c = std::conj(c);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const auto& kv) { return std::abs(kv.second.imag()) < tol; });
}

PauliSum PauliSum::tensor(const PauliSum& high, const PauliSum& low) {
  PauliSum out(high.n_qubits_ + low.n_qubits_);
  for (const auto& [sh, ch] : high.terms_)
    for (const auto& [sl, cl] : low.terms_) out.add(ch * cl, PauliString::concat(sh, sl));
  out.prune();
  return out;
}

void PauliSum::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kDropTolerance; });
}

DenseMatrix to_matrix(const PauliSum& op) {
  const int n = op.n_qubits();
  if (n > kMaxDenseQubits)
    throw ResourceError("dense matrix requested for " + std::to_string(n) + " qubits (cap " +
                        std::to_string(kMaxDenseQubits) + ")");
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  static const Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [s, c] : op.terms()) {
    const auto flip = s.flip_mask();
    const auto phase = s.phase_mask();
    const Complex base = c * kIPow[s.y_count() % 4];
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & phase) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ flip), static_cast<Eigen::Index>(j)) += sign * base;
    }
  }
  return m;
}

void to_json(nlohmann::json& j, const PauliSum& op) {
  j = nlohmann::json::array();
  for (const auto& [s, c] : op.terms())
    j.push_back({{"coeff_re", c.real()}, {"coeff_im", c.imag()}, {"string", s.to_string()}});
}

PauliSum pauli_sum_from_json(const nlohmann::json& j, int n_qubits) {
  if (!j.is_array()) throw DomainError("PauliSum JSON must be an array of terms");
  if (j.empty() && n_qubits < 1) throw DomainError("empty PauliSum JSON needs an explicit width");
  std::vector<PauliTerm> terms;
  for (const auto& item : j) {
    terms.push_back({Complex{item.at("coeff_re").get<double>(), item.at("coeff_im").get<double>()},
                     PauliString::parse(item.at("string").get<std::string>())});
  }
  return PauliSum(n_qubits > 0 ? n_qubits : terms.front().string.size(), terms);
}

}  // namespace yukawa
