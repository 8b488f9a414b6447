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

#include "yukawa/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <random>

#include <nlohmann/json.hpp>

#include "yukawa/errors.hpp"
#include "yukawa/observables.hpp"
#include "yukawa/synthesis.hpp"

namespace yukawa {
namespace {

constexpr double kOccupationSlack = 1e-9;

void check_method(const ModelParams& params, const EvolutionMethod& method) {
  if (method.kind == EvolutionKind::Compressed && params.n_boson_qubits != 1)
    throw DomainError("compressed evolution needs N = 1");
  if (method.kind == EvolutionKind::Trotter) {
    if (method.trotter_steps < 1) throw DomainError("trotter steps must be at least 1");
    if (method.trotter_order != 1 && method.trotter_order != 2) throw DomainError("trotter order must be 1 or 2");
  }
}

/// Runs `circuit` on `state`, adding and removing the ancilla qubit the wide
/// Trotter circuits carry.
Statevector run(const Circuit& circuit, const Statevector& state) {
  if (circuit.n_qubits() == state.n_qubits()) return apply_circuit(circuit, state);
  if (circuit.n_qubits() != state.n_qubits() + 1) throw DomainError("circuit width does not match the state");
  auto padded = apply_circuit(circuit, Statevector::tensor(Statevector(1), state));
  const auto half = static_cast<Eigen::Index>(state.dimension());
  if (padded.amplitudes().tail(half).norm() > 1e-10) throw InvariantError("ancilla did not return to |0>");
  Eigen::VectorXcd low = padded.amplitudes().head(half);
  low /= low.norm();
  return Statevector::from_amplitudes(std::move(low));
}

ParticleNumbers sample(const Statevector& state, int shots, std::mt19937_64& rng) {
  const auto& amps = state.amplitudes();
  std::vector<double> probs(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index k = 0; k < amps.size(); ++k) probs[static_cast<std::size_t>(k)] = std::norm(amps(k));
  std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
  ParticleNumbers out;
  for (int s = 0; s < shots; ++s) {
    const std::uint64_t k = dist(rng);
    out.boson += static_cast<double>(k >> 1);
    out.fermion += static_cast<double>(k & 1);
  }
  out.boson /= shots;
  out.fermion /= shots;
  return out;
}

}  // namespace

std::string EvolutionMethod::tag() const {
  switch (kind) {
    case EvolutionKind::Exact: return "exact";
    case EvolutionKind::Compressed: return "compressed";
    case EvolutionKind::Trotter:
      return "trotter:" + std::to_string(trotter_steps) + ":" + std::to_string(trotter_order);
  }
  return "";
}

std::vector<double> time_grid(double t_max, int n_points) {
  if (n_points < 2) throw DomainError("time grid needs at least two points");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("time grid needs a positive finite t_max");
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) out[static_cast<std::size_t>(i)] = t_max * i / (n_points - 1);
  return out;
}

Statevector evolve(const ModelParams& params, const Statevector& initial, double t, const EvolutionMethod& method) {
  params.validate();
  check_method(params, method);
  if (initial.n_qubits() != params.n_qubits()) throw DomainError("initial state width does not match the model");
  switch (method.kind) {
    case EvolutionKind::Exact: return Propagator(build_hamiltonian(params).total()).evolve(initial, t);
    case EvolutionKind::Compressed: return run(compressed_two_qubit_circuit(params, t), initial);
    case EvolutionKind::Trotter:
      return run(trotter_circuit(params, t, method.trotter_steps, method.trotter_order), initial);
  }
  throw DomainError("unknown evolution method");
}

TimeSeries quench_series(const ModelParams& params, const Statevector& initial, const std::vector<double>& times,
                         const EvolutionMethod& method, const SamplingOptions& sampling) {
  params.validate();
  check_method(params, method);
  if (initial.n_qubits() != params.n_qubits()) throw DomainError("initial state width does not match the model");
  if (times.empty()) throw DomainError("quench_series needs at least one time");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw DomainError("times must be finite");
    if (i > 0 && !(times[i] > times[i - 1])) throw DomainError("times must be strictly increasing");
  }
  if (sampling.shots < 0) throw DomainError("shot count must be non-negative");

  std::optional<Propagator> propagator;
  if (method.kind == EvolutionKind::Exact) propagator.emplace(build_hamiltonian(params).total());
  std::mt19937_64 rng(sampling.seed);
  const double t0 = params.reference_period();
  const double cutoff = static_cast<double>(params.cutoff());

  TimeSeries series{method.tag(), {}};
  series.rows.reserve(times.size());
  for (const double t : times) {
    const Statevector state = propagator ? propagator->evolve(initial, t) : evolve(params, initial, t, method);
    const ParticleNumbers n = sampling.shots > 0 ? sample(state, sampling.shots, rng) : particle_numbers(state, params);
    if (n.fermion < -kOccupationSlack || n.fermion > 1.0 + kOccupationSlack || n.boson < -kOccupationSlack ||
        n.boson > cutoff + kOccupationSlack)
      throw InvariantError("particle number left its physical range");
    series.rows.push_back({t, t / t0, n.boson, n.fermion});
  }
  return series;
}

std::string time_series_csv(const TimeSeries& series) {
  std::string out = "t,t_over_t0,n_boson,n_fermion,method\n";
  char buf[160];
  for (const auto& r : series.rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,", r.t, r.t_over_t0, r.n_boson, r.n_fermion);
    out += buf;
    out += series.method;
    out += '\n';
  }
  return out;
}

void to_json(nlohmann::json& j, const TimeSeries& series) {
  j = nlohmann::json::array();
  for (const auto& r : series.rows)
    j.push_back({{"t", r.t},
                 {"t_over_t0", r.t_over_t0},
                 {"n_boson", r.n_boson},
                 {"n_fermion", r.n_fermion},
                 {"method", series.method}});
}

namespace {

template <typename Field>
double max_deviation(const TimeSeries& a, const TimeSeries& b, Field field) {
  if (a.rows.size() != b.rows.size()) throw DomainError("series have different lengths");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].t != b.rows[i].t) throw DomainError("series are on different time grids");
    worst = std::max(worst, std::abs(field(a.rows[i]) - field(b.rows[i])));
  }
  return worst;
}

}  // namespace

double max_boson_deviation(const TimeSeries& a, const TimeSeries& b) {
  return max_deviation(a, b, [](const TimeSeriesRow& r) { return r.n_boson; });
}

double max_fermion_deviation(const TimeSeries& a, const TimeSeries& b) {
  return max_deviation(a, b, [](const TimeSeriesRow& r) { return r.n_fermion; });
}

}  // namespace yukawa
