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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "yukawa/model.hpp"
#include "yukawa/statevector.hpp"

namespace yukawa {

enum class EvolutionKind { Exact, Compressed, Trotter };

struct EvolutionMethod {
  EvolutionKind kind = EvolutionKind::Exact;
  int trotter_steps = 10;
  int trotter_order = 2;

  static EvolutionMethod exact() { return {}; }
  static EvolutionMethod compressed() { return {EvolutionKind::Compressed, 0, 0}; }
  static EvolutionMethod trotter(int steps, int order) { return {EvolutionKind::Trotter, steps, order}; }

  /// "exact", "compressed" or "trotter:<steps>:<order>".
  std::string tag() const;
};

struct TimeSeriesRow {
  double t = 0.0;
  double t_over_t0 = 0.0;
  double n_boson = 0.0;
  double n_fermion = 0.0;
};

struct TimeSeries {
  std::string method;
  std::vector<TimeSeriesRow> rows;
};

/// Finite-shot estimates drawn from the Born distribution; off when shots = 0.
struct SamplingOptions {
  int shots = 0;
  std::uint64_t seed = 0;
};

/// n_points evenly spaced times on [0, t_max].
std::vector<double> time_grid(double t_max, int n_points);

/// State at time t after the quench from `initial`.
Statevector evolve(const ModelParams& params, const Statevector& initial, double t, const EvolutionMethod& method);

/// Particle numbers along strictly increasing `times`.
TimeSeries quench_series(const ModelParams& params, const Statevector& initial, const std::vector<double>& times,
                         const EvolutionMethod& method, const SamplingOptions& sampling = {});

/// Header `t,t_over_t0,n_boson,n_fermion,method`, 12 significant digits.
std::string time_series_csv(const TimeSeries& series);
void to_json(nlohmann::json& j, const TimeSeries& series);

/// max_t |n_boson(a) - n_boson(b)| over equal time grids.
double max_boson_deviation(const TimeSeries& a, const TimeSeries& b);
/// max_t |n_fermion(a) - n_fermion(b)| over equal time grids.
double max_fermion_deviation(const TimeSeries& a, const TimeSeries& b);

}  // namespace yukawa
