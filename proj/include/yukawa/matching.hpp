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
#include <vector>

namespace yukawa {

/// Minimum-weight perfect matching on a complete graph with an even number of
/// vertices, by the weighted blossom method in O(n^3). `weights` is a
/// symmetric n x n row-major matrix of non-negative integers. Returns
/// mate[v] for every vertex.
std::vector<int> min_weight_perfect_matching(const std::vector<std::int64_t>& weights, int n);

/// Greedy matching: repeatedly pairs the lightest remaining edge. Carries no
/// optimality guarantee.
std::vector<int> greedy_perfect_matching(const std::vector<std::int64_t>& weights, int n);

std::int64_t matching_weight(const std::vector<std::int64_t>& weights, int n, const std::vector<int>& mate);

}  // namespace yukawa
