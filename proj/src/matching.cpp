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

#include "yukawa/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

/// Maximum-weight matching on a complete graph with positive integer weights,
/// primal-dual with blossom shrinking. Vertices are 1..n; blossoms take ids
/// n+1..2n. Dual labels are doubled so every update stays integral.
class WeightedBlossom {
 public:
  WeightedBlossom(int n, const std::vector<std::int64_t>& weight)
      : n_(n),
        size_(2 * n + 1),
        edges_(static_cast<std::size_t>(size_) * size_),
        label_(size_, 0),
        mate_(size_, 0),
        slack_(size_, 0),
        top_(size_, 0),
        parent_(size_, 0),
        side_(size_, -1),
        visit_(size_, 0),
        flower_from_(static_cast<std::size_t>(size_) * (n + 1), 0),
        flower_(size_) {
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v)
        edge(u, v) = {u, v, u == v ? 0 : weight[static_cast<std::size_t>((u - 1) * n_ + (v - 1))]};
  }

  std::vector<int> solve() {
    n_blossoms_ = n_;
    for (int u = 0; u <= n_; ++u) top_[u] = u;
    std::int64_t w_max = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        from(u, v) = u == v ? u : 0;
        w_max = std::max(w_max, edge(u, v).w);
      }
    for (int u = 1; u <= n_; ++u) label_[u] = w_max;
    while (augment_once()) {
    }
    std::vector<int> mate(static_cast<std::size_t>(n_), -1);
    for (int u = 1; u <= n_; ++u)
      if (mate_[u]) mate[static_cast<std::size_t>(u - 1)] = mate_[u] - 1;
    return mate;
  }

 private:
  struct Edge {
    int u = 0, v = 0;
    std::int64_t w = 0;
  };

  Edge& edge(int a, int b) { return edges_[static_cast<std::size_t>(a) * size_ + b]; }
  int& from(int b, int x) { return flower_from_[static_cast<std::size_t>(b) * (n_ + 1) + x]; }

  std::int64_t delta(const Edge& e) const { return label_[e.u] + label_[e.v] - 2 * e.w; }

  void update_slack(int u, int x) {
    if (!slack_[x] || delta(edge(u, x)) < delta(edge(slack_[x], x))) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (edge(u, x).w > 0 && top_[u] != x && side_[top_[u]] == 0) update_slack(u, x);
  }

  void push(int x) {
    if (x <= n_)
      queue_.push_back(x);
    else
      for (const int y : flower_[x]) push(y);
  }

  void set_top(int x, int b) {
    top_[x] = b;
    if (x > n_)
      for (const int y : flower_[x]) set_top(y, b);
  }

  int even_position(int b, int xr) {
    auto& f = flower_[b];
    const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    mate_[u] = edge(u, v).v;
    if (u <= n_) return;
    const Edge e = edge(u, v);
    const int xr = from(u, e.u);
    const int pr = even_position(u, xr);
    auto& f = flower_[u];
    for (int i = 0; i < pr; ++i) set_match(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i ^ 1)]);
    set_match(xr, v);
    std::rotate(f.begin(), f.begin() + pr, f.end());
  }

  void augment(int u, int v) {
    for (;;) {
      const int xnv = top_[mate_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, top_[parent_[xnv]]);
      u = top_[parent_[xnv]];
      v = xnv;
    }
  }

  int lowest_common_ancestor(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (visit_[u] == stamp_) return u;
      visit_[u] = stamp_;
      u = top_[mate_[u]];
      if (u) u = top_[parent_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_blossoms_ && top_[b]) ++b;
    if (b > n_blossoms_) ++n_blossoms_;
    label_[b] = 0;
    side_[b] = 0;
    mate_[b] = mate_[lca];
    auto& f = flower_[b];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = top_[parent_[y]]) {
      f.push_back(x);
      f.push_back(y = top_[mate_[x]]);
      push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = top_[parent_[y]]) {
      f.push_back(x);
      f.push_back(y = top_[mate_[x]]);
      push(y);
    }
    set_top(b, b);
    for (int x = 1; x <= n_blossoms_; ++x) edge(b, x).w = edge(x, b).w = 0;
    for (int x = 1; x <= n_; ++x) from(b, x) = 0;
    for (const int xs : f) {
      for (int x = 1; x <= n_blossoms_; ++x)
        if (edge(b, x).w == 0 || delta(edge(xs, x)) < delta(edge(b, x))) {
          edge(b, x) = edge(xs, x);
          edge(x, b) = edge(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (from(xs, x)) from(b, x) = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    auto& f = flower_[b];
    for (const int x : f) set_top(x, x);
    const int xr = from(b, edge(b, parent_[b]).u);
    const int pr = even_position(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = f[static_cast<std::size_t>(i)], xns = f[static_cast<std::size_t>(i + 1)];
      parent_[xs] = edge(xns, xs).u;
      side_[xs] = 1;
      side_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      push(xns);
    }
    side_[xr] = 1;
    parent_[xr] = parent_[b];
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < f.size(); ++i) {
      side_[f[i]] = -1;
      set_slack(f[i]);
    }
    top_[b] = 0;
  }

  bool on_tight_edge(const Edge& e) {
    const int u = top_[e.u], v = top_[e.v];
    if (side_[v] == -1) {
      parent_[v] = e.u;
      side_[v] = 1;
      const int nu = top_[mate_[v]];
      slack_[v] = slack_[nu] = 0;
      side_[nu] = 0;
      push(nu);
    } else if (side_[v] == 0) {
      const int lca = lowest_common_ancestor(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  // side_: 0 = even (outer), 1 = odd (inner), -1 = unlabeled.
  bool augment_once() {
    std::fill(side_.begin() + 1, side_.begin() + n_blossoms_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_blossoms_ + 1, 0);
    queue_.clear();
    for (int x = 1; x <= n_blossoms_; ++x)
      if (top_[x] == x && !mate_[x]) {
        parent_[x] = 0;
        side_[x] = 0;
        push(x);
      }
    if (queue_.empty()) return false;
    for (;;) {
      while (!queue_.empty()) {
        const int u = queue_.front();
        queue_.pop_front();
        if (side_[top_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (edge(u, v).w > 0 && top_[u] != top_[v]) {
            if (delta(edge(u, v)) == 0) {
              if (on_tight_edge(edge(u, v))) return true;
            } else {
              update_slack(u, top_[v]);
            }
          }
      }
      std::int64_t d = std::numeric_limits<std::int64_t>::max();
      for (int b = n_ + 1; b <= n_blossoms_; ++b)
        if (top_[b] == b && side_[b] == 1) d = std::min(d, label_[b] / 2);
      for (int x = 1; x <= n_blossoms_; ++x)
        if (top_[x] == x && slack_[x]) {
          if (side_[x] == -1)
            d = std::min(d, delta(edge(slack_[x], x)));
          else if (side_[x] == 0)
            d = std::min(d, delta(edge(slack_[x], x)) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (side_[top_[u]] == 0) {
          if (label_[u] <= d) return false;
          label_[u] -= d;
        } else if (side_[top_[u]] == 1) {
          label_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_blossoms_; ++b)
        if (top_[b] == b) {
          if (side_[top_[b]] == 0)
            label_[b] += 2 * d;
          else if (side_[top_[b]] == 1)
            label_[b] -= 2 * d;
        }
      queue_.clear();
      for (int x = 1; x <= n_blossoms_; ++x)
        if (top_[x] == x && slack_[x] && top_[slack_[x]] != x && delta(edge(slack_[x], x)) == 0)
          if (on_tight_edge(edge(slack_[x], x))) return true;
      for (int b = n_ + 1; b <= n_blossoms_; ++b)
        if (top_[b] == b && side_[b] == 1 && label_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int size_;
  int n_blossoms_ = 0;
  int stamp_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> label_;
  std::vector<int> mate_, slack_, top_, parent_, side_, visit_;
  std::vector<int> flower_from_;
  std::vector<std::vector<int>> flower_;
  std::deque<int> queue_;
};

void check_input(const std::vector<std::int64_t>& weights, int n) {
  if (n < 0 || n % 2) throw DomainError("perfect matching needs an even vertex count");
  if (weights.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("weight matrix has the wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto w = weights[static_cast<std::size_t>(i * n + j)];
      if (w < 0) throw DomainError("matching weights must be non-negative");
      if (w != weights[static_cast<std::size_t>(j * n + i)]) throw DomainError("matching weights must be symmetric");
    }
}

}  // namespace

std::vector<int> min_weight_perfect_matching(const std::vector<std::int64_t>& weights, int n) {
  check_input(weights, n);
  if (n == 0) return {};
  const std::int64_t w_max = *std::max_element(weights.begin(), weights.end());
  // Complementing against a constant above n * w_max makes every maximum
  // matching perfect, and among perfect ones the lightest in the original.
  const std::int64_t offset = static_cast<std::int64_t>(n) * w_max + 1;
  std::vector<std::int64_t> complemented(weights.size());
  std::transform(weights.begin(), weights.end(), complemented.begin(), [&](std::int64_t w) { return offset - w; });
  std::vector<int> mate = WeightedBlossom(n, complemented).solve();
  for (int v = 0; v < n; ++v)
    if (mate[static_cast<std::size_t>(v)] < 0) throw InvariantError("blossom matching left a vertex unmatched");
  return mate;
}

std::vector<int> greedy_perfect_matching(const std::vector<std::int64_t>& weights, int n) {
  check_input(weights, n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return weights[static_cast<std::size_t>(a.first * n + a.second)] <
           weights[static_cast<std::size_t>(b.first * n + b.second)];
  });
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  for (const auto& [i, j] : pairs)
    if (mate[static_cast<std::size_t>(i)] < 0 && mate[static_cast<std::size_t>(j)] < 0) {
      mate[static_cast<std::size_t>(i)] = j;
      mate[static_cast<std::size_t>(j)] = i;
    }
  return mate;
}

std::int64_t matching_weight(const std::vector<std::int64_t>& weights, int n, const std::vector<int>& mate) {
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v)
    if (const int u = mate[static_cast<std::size_t>(v)]; u > v) total += weights[static_cast<std::size_t>(v * n + u)];
  return total;
}

}  // namespace yukawa
