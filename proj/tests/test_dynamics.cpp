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

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "yukawa/dynamics.hpp"
#include "yukawa/errors.hpp"
#include "yukawa/observables.hpp"

namespace yukawa {
namespace {

const ModelParams kCaption1{7.0, 1.0, 1.7, 1};

Statevector product(const Statevector& boson, const Statevector& fermion) {
  return Statevector::tensor(boson, fermion);
}

Statevector fermion_state(char which) {
  const double r = std::numbers::sqrt2 / 2;
  switch (which) {
    case '0': return Statevector::basis(1, 0);
    case '1': return Statevector::basis(1, 1);
    case '+': return Statevector::from_amplitudes(Eigen::Vector2cd(r, r));
    default: return Statevector::from_amplitudes(Eigen::Vector2cd(r, -r));
  }
}

double spread(const TimeSeries& s) {
  double lo = 1e300, hi = -1e300;
  for (const auto& r : s.rows) {
    lo = std::min(lo, r.n_boson);
    hi = std::max(hi, r.n_boson);
  }
  return hi - lo;
}

TEST(TimeGrid, EvenlySpaced) {
  const auto grid = time_grid(2.0, 5);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_DOUBLE_EQ(grid[0], 0.0);
  EXPECT_DOUBLE_EQ(grid[1], 0.5);
  EXPECT_DOUBLE_EQ(grid[4], 2.0);
  EXPECT_THROW(time_grid(1.0, 1), DomainError);
}

TEST(EvolutionMethod, Tags) {
  EXPECT_EQ(EvolutionMethod::exact().tag(), "exact");
  EXPECT_EQ(EvolutionMethod::compressed().tag(), "compressed");
  EXPECT_EQ(EvolutionMethod::trotter(10, 2).tag(), "trotter:10:2");
}

TEST(QuenchSeries, CompressedAgreesWithExactAndClosedForm) {
  const auto times = time_grid(2 * kCaption1.reference_period(), 51);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    const auto initial = testing::random_state(rng, 2);
    const auto exact = quench_series(kCaption1, initial, times, EvolutionMethod::exact());
    const auto compressed = quench_series(kCaption1, initial, times, EvolutionMethod::compressed());
    EXPECT_LE(max_boson_deviation(exact, compressed), 1e-9);
    EXPECT_LE(max_fermion_deviation(exact, compressed), 1e-9);
    for (const auto& row : exact.rows)
      EXPECT_NEAR(row.n_boson, analytic_boson_number(initial, 1.0, 1.7, row.t), 1e-9);
    EXPECT_NEAR(exact.rows.back().t_over_t0, 2.0, 1e-12);
  }
}

TEST(QuenchSeries, FreeEvolutionConservesBothNumbers) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 3; ++n) {
    const ModelParams p{7.0, 1.0, 0.0, n};
    const auto initial = testing::random_state(rng, n + 1);
    const auto start = particle_numbers(initial, p);
    std::vector<EvolutionMethod> methods{EvolutionMethod::exact(), EvolutionMethod::trotter(3, 2)};
    if (n == 1) methods.push_back(EvolutionMethod::compressed());
    for (const auto& method : methods) {
      const auto series = quench_series(p, initial, time_grid(10.0, 11), method);
      for (const auto& row : series.rows) {
        EXPECT_NEAR(row.n_boson, start.boson, 1e-10) << method.tag();
        EXPECT_NEAR(row.n_fermion, start.fermion, 1e-10) << method.tag();
      }
    }
  }
}

TEST(QuenchSeries, ExactEvolutionConservesEnergy) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    const ModelParams p{7.0, 1.0, 1.7, n};
    const PauliSum h = build_hamiltonian(p).total();
    const auto initial = testing::random_state(rng, n + 1);
    const double e0 = expectation(initial, h);
    for (const double t : time_grid(5.0, 21)) {
      const auto state = evolve(p, initial, t, EvolutionMethod::exact());
      EXPECT_NEAR(state.norm(), 1.0, 1e-10);
      EXPECT_NEAR(expectation(state, h), e0, 1e-9);
    }
  }
}

// The boson series of a noninteracting state does not depend on the
// fermion occupation: compare |+> with |->, and Fock or fixed-parity boson
// states under |0> and |1>.
TEST(QuenchSeries, NoninteractingStatesIgnoreFermionFlip) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 2; ++n) {
    const ModelParams p{7.0, 1.0, 1.7, n};
    const auto times = time_grid(2 * p.reference_period(), 26);
    auto series = [&](const Statevector& b, char f) {
      const auto initial = product(b, fermion_state(f));
      EXPECT_TRUE(noninteracting_predicate(ProductState{b, fermion_state(f)}));
      return quench_series(p, initial, times, EvolutionMethod::exact());
    };
    const auto boson = testing::random_state(rng, n);
    EXPECT_LE(max_boson_deviation(series(boson, '+'), series(boson, '-')), 1e-9);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      const auto fock = Statevector::basis(n, k);
      EXPECT_LE(max_boson_deviation(series(fock, '0'), series(fock, '1')), 1e-9);
    }
  }
  Eigen::VectorXcd even(4);
  even << std::sqrt(3.0) / 2, 0, 0.5, 0;
  const auto b = Statevector::from_amplitudes(even);
  const ModelParams p{7.0, 1.0, 1.7, 2};
  const auto times = time_grid(2 * p.reference_period(), 26);
  const auto zero = quench_series(p, product(b, fermion_state('0')), times, EvolutionMethod::exact());
  const auto one = quench_series(p, product(b, fermion_state('1')), times, EvolutionMethod::exact());
  EXPECT_LE(max_boson_deviation(zero, one), 1e-9);
}

TEST(QuenchSeries, InteractingStateMovesBosonNumber) {
  const double r = std::numbers::sqrt2 / 2;
  const auto boson = Statevector::from_amplitudes(Eigen::Vector2cd(r, r));
  EXPECT_FALSE(noninteracting_predicate(ProductState{boson, fermion_state('1')}));
  const auto times = time_grid(2 * kCaption1.reference_period(), 51);
  const auto one = quench_series(kCaption1, product(boson, fermion_state('1')), times, EvolutionMethod::compressed());
  const auto zero = quench_series(kCaption1, product(boson, fermion_state('0')), times, EvolutionMethod::compressed());
  EXPECT_GT(spread(one), 1e-2);
  EXPECT_GT(max_boson_deviation(one, zero), 1e-2);
}

TEST(QuenchSeries, TrotterConvergesToExact) {
  for (int n = 2; n <= 3; ++n) {
    const ModelParams p{7.0, 1.0, 1.7, n};
    const auto times = time_grid(p.reference_period(), 11);
    const auto initial = product(Statevector::basis(n, 0), fermion_state('1'));
    const auto exact = quench_series(p, initial, times, EvolutionMethod::exact());
    double previous = 1e300;
    for (const int steps : {5, 10, 20}) {
      const double dev = max_boson_deviation(quench_series(p, initial, times, EvolutionMethod::trotter(steps, 2)), exact);
      EXPECT_LT(dev, previous) << "N=" << n << " steps=" << steps;
      previous = dev;
    }
    EXPECT_LT(previous, 0.05);
  }
}

TEST(QuenchSeries, Validation) {
  const auto initial = Statevector(2);
  EXPECT_THROW(quench_series(kCaption1, initial, {0.0, 1.0, 1.0}, EvolutionMethod::exact()), DomainError);
  EXPECT_THROW(quench_series(kCaption1, initial, {}, EvolutionMethod::exact()), DomainError);
  EXPECT_THROW(quench_series({7.0, 1.0, 1.7, 2}, Statevector(3), {0.0}, EvolutionMethod::compressed()), DomainError);
  EXPECT_THROW(quench_series(kCaption1, Statevector(3), {0.0}, EvolutionMethod::exact()), DomainError);
  EXPECT_THROW(quench_series(kCaption1, initial, {0.0}, EvolutionMethod::trotter(0, 2)), DomainError);
}

TEST(QuenchSeries, SeededSamplingIsReproducible) {
  const auto initial = product(Statevector::basis(1, 0), fermion_state('1'));
  const auto times = time_grid(kCaption1.reference_period(), 11);
  const SamplingOptions sampling{200, 7};
  const auto a = quench_series(kCaption1, initial, times, EvolutionMethod::compressed(), sampling);
  const auto b = quench_series(kCaption1, initial, times, EvolutionMethod::compressed(), sampling);
  EXPECT_EQ(time_series_csv(a), time_series_csv(b));
  const auto c = quench_series(kCaption1, initial, times, EvolutionMethod::compressed(), {200, 8});
  EXPECT_NE(time_series_csv(a), time_series_csv(c));
  const auto exact = quench_series(kCaption1, initial, times, EvolutionMethod::exact());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_GE(a.rows[i].n_boson, 0.0);
    EXPECT_LE(a.rows[i].n_boson, 1.0);
    EXPECT_NEAR(a.rows[i].n_boson, exact.rows[i].n_boson, 0.15);
    // Each estimate is a multiple of 1 / shots.
    EXPECT_NEAR(a.rows[i].n_fermion * 200, std::round(a.rows[i].n_fermion * 200), 1e-9);
  }
}

TEST(TimeSeriesOutput, CsvAndJson) {
  const auto initial = product(Statevector::basis(1, 0), fermion_state('1'));
  const auto series = quench_series(kCaption1, initial, {0.0, 1.0 / 3}, EvolutionMethod::compressed());
  std::istringstream csv(time_series_csv(series));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t,t_over_t0,n_boson,n_fermion,method");
  std::getline(csv, line);
  EXPECT_EQ(line, "0,0,0,1,compressed");
  std::getline(csv, line);
  EXPECT_EQ(line.substr(0, line.find(',')), "0.333333333333");
  EXPECT_FALSE(std::getline(csv, line));

  const nlohmann::json j = series;
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["method"], "compressed");
  EXPECT_DOUBLE_EQ(j[1]["n_boson"].get<double>(), series.rows[1].n_boson);
}

}  // namespace
}  // namespace yukawa
