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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "yukawa/pauli.hpp"

namespace yukawa {

/// Complete graph over distinct Pauli strings plus an ancilla vertex. String
/// vertices are 0..k-1 in the given order; the ancilla is vertex k.
class OrderingGraph {
 public:
  /// Hamming distances between strings, Hamming weights to the ancilla.
  explicit OrderingGraph(std::vector<PauliString> strings);
  /// Explicit weights over k + 1 vertices, row-major; must be symmetric with
  /// a zero diagonal.
  OrderingGraph(std::vector<PauliString> strings, std::vector<int> weights);

  int size() const { return static_cast<int>(strings_.size()); }
  int ancilla() const { return size(); }
  int vertex_count() const { return size() + 1; }
  const std::vector<PauliString>& strings() const { return strings_; }
  int weight(int a, int b) const { return weights_[static_cast<std::size_t>(a * vertex_count() + b)]; }
  const std::vector<int>& weights() const { return weights_; }

  /// Triangle inequality over all vertex triples.
  bool is_metric() const;

 private:
  std::vector<PauliString> strings_;
  std::vector<int> weights_;
};

OrderingGraph build_ordering_graph(const std::vector<PauliString>& strings);

/// Closed tour starting and ending at the ancilla.
struct Tour {
  std::vector<PauliString> order;
  std::int64_t cost = 0;
};

/// Cost of visiting `order` (indices of string vertices) from and back to
/// the ancilla.
std::int64_t tour_cost(const OrderingGraph& graph, const std::vector<int>& order);

inline constexpr int kHeldKarpMaxStrings = 18;

/// Exact minimum tour. Among optimal tours returns the lexicographically
/// smallest string sequence, so the result does not depend on input order.
Tour held_karp(const OrderingGraph& graph);

struct ChristofidesOptions {
  /// Pair odd vertices greedily instead of exactly; voids the 3/2 bound.
  bool greedy_matching = false;
};

inline constexpr int kChristofidesMaxStrings = 4096;

/// Spanning tree, exact odd-vertex matching, Euler circuit from the ancilla,
/// shortcut to first visits. Rejects non-metric graphs.
Tour christofides(const OrderingGraph& graph, const ChristofidesOptions& options = {});

/// N 2^N, the cost of the Gray-code construction for the N-qubit string set.
std::int64_t cnot_upper_bound(int n_qubits);

enum class CostMethod { Exact, Heuristic, Bound };
std::string cost_method_name(CostMethod m);
CostMethod cost_method_from_name(const std::string& name);

struct CostRow {
  int n_qubits = 0;
  CostMethod method = CostMethod::Bound;
  std::optional<std::int64_t> cost;  // empty when skipped
  std::int64_t string_count = 0;
  std::string status = "ok";
  std::vector<PauliString> tour;  // solver rows only
};

struct CostReport {
  std::vector<CostRow> rows;
  /// Broken relations among computed rows: exact <= heuristic <= 1.5 exact,
  /// heuristic <= bound, exact non-decreasing in N.
  std::vector<std::string> violations;
};

/// Rows for N = 1..max_qubits in method order. Exact rows past the Held-Karp
/// cap and heuristic rows past the Christofides cap are marked skipped.
CostReport cost_report(int max_qubits, const std::vector<CostMethod>& methods);

/// Header `N,method,cost,strings`; `strings` holds |S_N|, or `status=skipped`.
std::string cost_report_csv(const CostReport& report);
void to_json(nlohmann::json& j, const CostReport& report);
void to_json(nlohmann::json& j, const Tour& tour);

}  // namespace yukawa
