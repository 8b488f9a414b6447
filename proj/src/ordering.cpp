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

#include "yukawa/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "yukawa/errors.hpp"
#include "yukawa/matching.hpp"
#include "yukawa/model.hpp"

namespace yukawa {
namespace {

void check_strings(const std::vector<PauliString>& strings) {
  if (strings.empty()) throw DomainError("ordering graph needs at least one string");
  std::set<PauliString> seen;
  for (const auto& s : strings) {
    if (s.size() != strings.front().size()) throw DomainError("ordering graph strings differ in length");
    if (!seen.insert(s).second) throw DomainError("duplicate string " + s.to_string() + " in ordering graph");
  }
}

}  // namespace

OrderingGraph::OrderingGraph(std::vector<PauliString> strings) : strings_(std::move(strings)) {
  check_strings(strings_);
  const int v = vertex_count();
  weights_.assign(static_cast<std::size_t>(v) * v, 0);
  for (int a = 0; a < size(); ++a) {
    const int wa = hamming_weight(strings_[static_cast<std::size_t>(a)]);
    weights_[static_cast<std::size_t>(a * v + ancilla())] = wa;
    weights_[static_cast<std::size_t>(ancilla() * v + a)] = wa;
    for (int b = a + 1; b < size(); ++b) {
      const int d = hamming_distance(strings_[static_cast<std::size_t>(a)], strings_[static_cast<std::size_t>(b)]);
      weights_[static_cast<std::size_t>(a * v + b)] = d;
      weights_[static_cast<std::size_t>(b * v + a)] = d;
    }
  }
}

OrderingGraph::OrderingGraph(std::vector<PauliString> strings, std::vector<int> weights)
    : strings_(std::move(strings)), weights_(std::move(weights)) {
  check_strings(strings_);
  const int v = vertex_count();
  if (weights_.size() != static_cast<std::size_t>(v) * v) throw DomainError("weight matrix has the wrong size");
  for (int a = 0; a < v; ++a) {
    if (weight(a, a) != 0) throw DomainError("weight matrix needs a zero diagonal");
    for (int b = 0; b < v; ++b) {
      if (weight(a, b) < 0) throw DomainError("weights must be non-negative");
      if (weight(a, b) != weight(b, a)) throw DomainError("weight matrix must be symmetric");
    }
  }
}

bool OrderingGraph::is_metric() const {
  const int v = vertex_count();
  for (int i = 0; i < v; ++i) {
    const int* row_i = weights_.data() + static_cast<std::size_t>(i) * v;
    bool bad = false;
    for (int l = 0; l < v; ++l) {
      const int* row_l = weights_.data() + static_cast<std::size_t>(l) * v;
      const int w_il = row_i[l];
      for (int j = 0; j < v; ++j) bad |= row_i[j] > w_il + row_l[j];
    }
    if (bad) return false;
  }
  return true;
}

OrderingGraph build_ordering_graph(const std::vector<PauliString>& strings) { return OrderingGraph(strings); }

std::int64_t tour_cost(const OrderingGraph& graph, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != graph.size()) throw DomainError("tour must visit every string once");
  std::vector<bool> seen(static_cast<std::size_t>(graph.size()), false);
  std::int64_t cost = 0;
  int prev = graph.ancilla();
  for (const int v : order) {
    if (v < 0 || v >= graph.size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("tour must visit every string once");
    seen[static_cast<std::size_t>(v)] = true;
    cost += graph.weight(prev, v);
    prev = v;
  }
  return cost + graph.weight(prev, graph.ancilla());
}

Tour held_karp(const OrderingGraph& graph) {
  const int k = graph.size();
  if (k > kHeldKarpMaxStrings)
    throw ResourceError("held_karp: " + std::to_string(k) + " strings exceeds the cap of " +
                        std::to_string(kHeldKarpMaxStrings) + "; use christofides");
  // Work over strings in canonical order so ties resolve independently of input order.
  std::vector<int> node(static_cast<std::size_t>(k));
  std::iota(node.begin(), node.end(), 0);
  std::sort(node.begin(), node.end(), [&](int a, int b) {
    return graph.strings()[static_cast<std::size_t>(a)] < graph.strings()[static_cast<std::size_t>(b)];
  });
  const auto w = [&](int a, int b) {
    return graph.weight(a == k ? k : node[static_cast<std::size_t>(a)], b == k ? k : node[static_cast<std::size_t>(b)]);
  };

  // rest[R * k + j]: cheapest path from j through every vertex of R back to the ancilla.
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<int> rest(subsets * static_cast<std::size_t>(k), std::numeric_limits<int>::max());
  const auto at = [&](std::size_t r, int j) -> int& { return rest[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)]; };
  for (int j = 0; j < k; ++j) at(0, j) = w(j, k);
  for (std::size_t r = 1; r < subsets; ++r)
    for (int j = 0; j < k; ++j) {
      if (r >> j & 1) continue;
      int best = std::numeric_limits<int>::max();
      for (int x = 0; x < k; ++x)
        if (r >> x & 1) best = std::min(best, w(j, x) + at(r & ~(std::size_t{1} << x), x));
      at(r, j) = best;
    }

  Tour tour;
  std::size_t remaining = subsets - 1;
  int current = k;
  std::vector<int> order;
  while (remaining) {
    int pick = -1, best = std::numeric_limits<int>::max();
    for (int x = 0; x < k; ++x) {
      if (!(remaining >> x & 1)) continue;
      const int c = w(current, x) + at(remaining & ~(std::size_t{1} << x), x);
      if (c < best) best = c, pick = x;
    }
    if (current == k) tour.cost = best;
    order.push_back(node[static_cast<std::size_t>(pick)]);
    remaining &= ~(std::size_t{1} << pick);
    current = pick;
  }
  if (tour_cost(graph, order) != tour.cost) throw InvariantError("held_karp reconstruction disagrees with its table");
  for (const int v : order) tour.order.push_back(graph.strings()[static_cast<std::size_t>(v)]);
  return tour;
}

Tour christofides(const OrderingGraph& graph, const ChristofidesOptions& options) {
  const int k = graph.size();
  if (k > kChristofidesMaxStrings)
    throw ResourceError("christofides: " + std::to_string(k) + " strings exceeds the cap of " +
                        std::to_string(kChristofidesMaxStrings));
  if (!graph.is_metric()) throw DomainError("christofides needs weights obeying the triangle inequality");
  const int v = graph.vertex_count();
  const int root = graph.ancilla();

  // Prim, lowest index on ties.
  std::vector<std::pair<int, int>> edges;
  {
    std::vector<int> dist(static_cast<std::size_t>(v), std::numeric_limits<int>::max());
    std::vector<int> link(static_cast<std::size_t>(v), -1);
    std::vector<bool> in_tree(static_cast<std::size_t>(v), false);
    dist[static_cast<std::size_t>(root)] = 0;
    for (int step = 0; step < v; ++step) {
      int u = -1;
      for (int x = 0; x < v; ++x)
        if (!in_tree[static_cast<std::size_t>(x)] && (u < 0 || dist[static_cast<std::size_t>(x)] < dist[static_cast<std::size_t>(u)]))
          u = x;
      in_tree[static_cast<std::size_t>(u)] = true;
      if (link[static_cast<std::size_t>(u)] >= 0) edges.emplace_back(link[static_cast<std::size_t>(u)], u);
      for (int x = 0; x < v; ++x)
        if (!in_tree[static_cast<std::size_t>(x)] && graph.weight(u, x) < dist[static_cast<std::size_t>(x)]) {
          dist[static_cast<std::size_t>(x)] = graph.weight(u, x);
          link[static_cast<std::size_t>(x)] = u;
        }
    }
  }

  std::vector<int> degree(static_cast<std::size_t>(v), 0);
  for (const auto& [a, b] : edges) ++degree[static_cast<std::size_t>(a)], ++degree[static_cast<std::size_t>(b)];
  std::vector<int> odd;
  for (int x = 0; x < v; ++x)
    if (degree[static_cast<std::size_t>(x)] % 2) odd.push_back(x);
  const int n_odd = static_cast<int>(odd.size());
  std::vector<std::int64_t> odd_weights(static_cast<std::size_t>(n_odd) * n_odd);
  for (int a = 0; a < n_odd; ++a)
    for (int b = 0; b < n_odd; ++b)
      odd_weights[static_cast<std::size_t>(a * n_odd + b)] =
          graph.weight(odd[static_cast<std::size_t>(a)], odd[static_cast<std::size_t>(b)]);
  const auto mate = options.greedy_matching ? greedy_perfect_matching(odd_weights, n_odd)
                                            : min_weight_perfect_matching(odd_weights, n_odd);
  for (int a = 0; a < n_odd; ++a)
    if (const int b = mate[static_cast<std::size_t>(a)]; a < b)
      edges.emplace_back(odd[static_cast<std::size_t>(a)], odd[static_cast<std::size_t>(b)]);

  // Hierholzer from the ancilla, neighbours taken in (vertex, edge id) order.
  std::vector<std::vector<std::pair<int, int>>> adjacency(static_cast<std::size_t>(v));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [a, b] = edges[static_cast<std::size_t>(e)];
    adjacency[static_cast<std::size_t>(a)].emplace_back(b, e);
    adjacency[static_cast<std::size_t>(b)].emplace_back(a, e);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(v), 0);
  std::vector<int> stack{root}, circuit;
  while (!stack.empty()) {
    const int u = stack.back();
    auto& list = adjacency[static_cast<std::size_t>(u)];
    auto& pos = cursor[static_cast<std::size_t>(u)];
    while (pos < list.size() && used[static_cast<std::size_t>(list[pos].second)]) ++pos;
    if (pos == list.size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      used[static_cast<std::size_t>(list[pos].second)] = true;
      stack.push_back(list[pos].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  std::vector<bool> visited(static_cast<std::size_t>(v), false);
  visited[static_cast<std::size_t>(root)] = true;
  std::vector<int> order;
  for (const int x : circuit)
    if (!visited[static_cast<std::size_t>(x)]) {
      visited[static_cast<std::size_t>(x)] = true;
      order.push_back(x);
    }
  Tour tour;
  tour.cost = tour_cost(graph, order);
  for (const int x : order) tour.order.push_back(graph.strings()[static_cast<std::size_t>(x)]);
  return tour;
}

std::int64_t cnot_upper_bound(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 56) throw DomainError("cnot_upper_bound: N must be in [1, 56]");
  return static_cast<std::int64_t>(n_qubits) << n_qubits;
}

std::string cost_method_name(CostMethod m) {
  switch (m) {
    case CostMethod::Exact: return "exact";
    case CostMethod::Heuristic: return "heuristic";
    case CostMethod::Bound: return "bound";
  }
  return "";
}

CostMethod cost_method_from_name(const std::string& name) {
  if (name == "exact") return CostMethod::Exact;
  if (name == "heuristic") return CostMethod::Heuristic;
  if (name == "bound") return CostMethod::Bound;
  throw DomainError("unknown cost method '" + name + "' (expected exact, heuristic or bound)");
}

CostReport cost_report(int max_qubits, const std::vector<CostMethod>& methods) {
  if (max_qubits < 1 || max_qubits > 56) throw DomainError("cost_report: N_max must be in [1, 56]");
  if (methods.empty()) throw DomainError("cost_report: no methods requested");
  CostReport report;
  std::optional<std::int64_t> previous_exact;
  for (int n = 1; n <= max_qubits; ++n) {
    const std::int64_t count = string_count(n);
    std::optional<std::int64_t> exact, heuristic, bound;
    std::vector<PauliString> strings;
    const auto strings_for = [&]() -> const std::vector<PauliString>& {
      if (strings.empty()) strings = generate_pauli_strings(n);
      return strings;
    };
    for (const CostMethod m : methods) {
      CostRow row{n, m, std::nullopt, count, "ok", {}};
      if (m == CostMethod::Bound) {
        row.cost = bound = cnot_upper_bound(n);
      } else if (m == CostMethod::Exact && count <= kHeldKarpMaxStrings) {
        Tour t = held_karp(build_ordering_graph(strings_for()));
        row.cost = exact = t.cost;
        row.tour = std::move(t.order);
      } else if (m == CostMethod::Heuristic && count <= kChristofidesMaxStrings) {
        Tour t = christofides(build_ordering_graph(strings_for()));
        row.cost = heuristic = t.cost;
        row.tour = std::move(t.order);
      } else {
        row.status = "skipped";
      }
      report.rows.push_back(std::move(row));
    }
    const std::string at = " at N=" + std::to_string(n);
    if (exact && heuristic && *exact > *heuristic) report.violations.push_back("exact > heuristic" + at);
    if (exact && heuristic && 2 * *heuristic > 3 * *exact) report.violations.push_back("heuristic > 1.5 exact" + at);
    if (heuristic && bound && *heuristic > *bound) report.violations.push_back("heuristic > bound" + at);
    if (exact && bound && *exact > *bound) report.violations.push_back("exact > bound" + at);
    if (exact && previous_exact && *exact < *previous_exact) report.violations.push_back("exact decreased" + at);
    if (exact) previous_exact = exact;
  }
  return report;
}

std::string cost_report_csv(const CostReport& report) {
  std::string out = "N,method,cost,strings\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n_qubits) + "," + cost_method_name(r.method) + ",";
    if (r.cost) out += std::to_string(*r.cost);
    out += ",";
    out += r.status == "ok" ? std::to_string(r.string_count) : "status=" + r.status;
    out += "\n";
  }
  return out;
}

void to_json(nlohmann::json& j, const Tour& tour) {
  j = nlohmann::json{{"cost", tour.cost}, {"order", nlohmann::json::array()}};
  for (const auto& s : tour.order) j["order"].push_back(s.to_string());
}

void to_json(nlohmann::json& j, const CostReport& report) {
  j = nlohmann::json{{"rows", nlohmann::json::array()}, {"violations", report.violations}};
  for (const auto& r : report.rows) {
    nlohmann::json row{{"N", r.n_qubits},
                       {"method", cost_method_name(r.method)},
                       {"cost", r.cost ? nlohmann::json(*r.cost) : nlohmann::json(nullptr)},
                       {"strings", r.string_count},
                       {"status", r.status}};
    if (!r.tour.empty()) {
      row["tour"] = nlohmann::json::array();
      for (const auto& s : r.tour) row["tour"].push_back(s.to_string());
    }
    j["rows"].push_back(std::move(row));
  }
}

}  // namespace yukawa
