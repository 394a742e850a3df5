// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqwalk/search.hpp"
#include "sqwalk/tolerances.hpp"

using namespace sqw;

namespace {
constexpr double kPi = std::numbers::pi;

ProbabilityTrace full_trace(const Graph& g, double phi, int m_max) {
  StepOperator op(g, phi);
  return probability_trace(op, uniform_initial_state(op.graph(), op.index()),
                           m_max);
}
}  // namespace

TEST_CASE("probability trace basics") {
  auto g = complete_graph(64, 1);
  auto tr = full_trace(g, kPi, 10);
  REQUIRE(tr.size() == 11);
  CHECK(tr.incident[0] == doctest::Approx(2.0 / 64));
  for (std::size_t m = 0; m < tr.size(); ++m) {
    CHECK(tr.incident[m] >= 0.0);
    CHECK(tr.incident[m] <= 1.0 + 1e-12);
    CHECK(tr.incident[m] ==
          doctest::Approx(tr.entering[m] + tr.leaving[m]));  // v = 1: no
                                                             // special-special
                                                             // edges
  }

  // phi = 0: the trace is flat.
  auto flat = full_trace(complete_graph(64, 1), 0.0, 50);
  for (double p : flat.incident) CHECK(std::abs(p - flat.incident[0]) <= 1e-12);
}

TEST_CASE("peak finding on the headline configuration") {
  auto g = complete_graph(256, 1);
  auto tr = full_trace(g, kPi, 40);
  auto pk = peak(tr.incident);
  CHECK(pk.p_peak >= 0.999);
  CHECK(std::abs(pk.m_peak - 18) <= 1);
}

TEST_CASE("repetition pmf") {
  CHECK(repetition_pmf(1.0, 1) == 1.0);
  CHECK(repetition_pmf(1.0, 5) == 0.0);
  CHECK(repetition_pmf(0.5, 3) == doctest::Approx(0.125));
  double sum = 0.0;
  for (int k = 1; k <= 400; ++k) sum += repetition_pmf(0.1, k);
  CHECK(sum == doctest::Approx(1.0));
  CHECK_THROWS_AS(repetition_pmf(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(repetition_pmf(0.5, 0), std::invalid_argument);
}

TEST_CASE("optimal steps under both cost models") {
  // Constant trace: WalkOnly picks m = 1, WalkPlusMeasure picks m = 0.
  std::vector<double> constant(10, 0.25);
  auto wo = optimal_steps(constant, CostModel::WalkOnly);
  CHECK(wo.m_opt == 1);
  CHECK(wo.n_bar == doctest::Approx(4.0));
  CHECK(wo.measure_only == doctest::Approx(4.0));
  auto wm = optimal_steps(constant, CostModel::WalkPlusMeasure);
  CHECK(wm.m_opt == 0);
  CHECK(wm.n_bar == doctest::Approx(4.0));

  // The walk-only optimum sits below the probability peak: stopping early
  // at P ~ 0.9 and repeating is cheaper than walking all the way to P ~ 1.
  auto tr = full_trace(complete_graph(256, 1), kPi, 40);
  auto opt = optimal_steps(tr.incident, CostModel::WalkOnly);
  CHECK(opt.m_opt >= 1);
  CHECK(opt.m_opt <= 18);
  CHECK(opt.n_bar <= 18.0 / tr.incident[18]);  // no worse than stop-at-peak
  CHECK(opt.n_bar <= 20.0);

  CHECK_THROWS_AS(optimal_steps({}), std::invalid_argument);
  CHECK_THROWS_AS(optimal_steps({0.0, 0.0}), std::domain_error);
}

TEST_CASE("collapsed fast trace matches the full engine") {
  for (auto [n, v] : {std::array<int, 2>{64, 1}, {128, 2}}) {
    for (double phi : {kPi, kPi / 2, 1.0}) {
      auto fast = collapsed_fast_trace(complete_model(n, v, phi, false),
                                       StartState::Uniform, 30);
      auto slow = full_trace(complete_graph(n, v), phi, 30);
      for (int m = 0; m <= 30; ++m) {
        CHECK(std::abs(fast.incident[m] - slow.incident[m]) <= 1e-8);
        CHECK(std::abs(fast.entering[m] - slow.entering[m]) <= 1e-8);
        CHECK(std::abs(fast.leaving[m] - slow.leaving[m]) <= 1e-8);
      }
    }
  }

  // Bipartite, uniform and entering starts, via the 8-dim one-step model.
  auto model = bipartite_model(12, 9, 1, 1, kPi, false);
  StepOperator op(bipartite_graph(12, 9, 1, 1), kPi);
  for (auto start : {StartState::Uniform, StartState::EnteringSet2}) {
    auto fast = collapsed_fast_trace(model, start, 25);
    auto init = start == StartState::Uniform
                    ? uniform_initial_state(op.graph(), op.index())
                    : bipartite_entering_state(op.graph(), op.index(), 2);
    auto slow = probability_trace(op, init, 25);
    for (int m = 0; m <= 25; ++m)
      CHECK(std::abs(fast.incident[m] - slow.incident[m]) <= 1e-8);
  }

  // M-partite too.
  auto mp_fast = collapsed_fast_trace(mpartite_model(4, 3, kPi, false),
                                      StartState::Uniform, 20);
  auto mp_slow = full_trace(mpartite_graph(4, 3), kPi, 20);
  for (int m = 0; m <= 20; ++m)
    CHECK(std::abs(mp_fast.incident[m] - mp_slow.incident[m]) <= 1e-8);
}

TEST_CASE("collapsed sweep is at least 100x faster than full space") {
  using clock = std::chrono::steady_clock;
  const int n = 256, v = 1;
  const int m_max = default_m_max(n, v);
  const std::vector<double> phis = {kPi / 3, 2.0, kPi, 4.5};

  auto t0 = clock::now();
  auto fast = phase_sweep(n, v, phis, m_max);
  auto t1 = clock::now();
  std::vector<ProbabilityTrace> slow;
  for (double phi : phis) slow.push_back(full_trace(complete_graph(n, v), phi, m_max));
  auto t2 = clock::now();

  for (std::size_t i = 0; i < phis.size(); ++i)
    for (int m = 0; m <= m_max; ++m)
      CHECK(std::abs(fast.traces[i].incident[m] - slow[i].incident[m]) <= 1e-8);

  const auto fast_ns = std::chrono::nanoseconds(t1 - t0).count();
  const auto slow_ns = std::chrono::nanoseconds(t2 - t1).count();
  CHECK(slow_ns >= 100 * fast_ns);
}

TEST_CASE("phase sweep symmetry and maximum") {
  const int n = 64, v = 1;
  auto grid = default_phi_grid(64);
  auto sweep = phase_sweep(n, v, grid, default_m_max(n, v));
  // phi and 2pi - phi columns agree (index i vs points - i).
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto& a = sweep.traces[i].incident;
    const auto& b = sweep.traces[grid.size() - i].incident;
    for (std::size_t m = 0; m < a.size(); ++m)
      CHECK(std::abs(a[m] - b[m]) <= 1e-12);
  }
  // Global maximum over the grid sits at phi = pi (index points/2).
  double best = 0.0;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = peak(sweep.traces[i].incident).p_peak;
    if (p > best) {
      best = p;
      best_i = i;
    }
  }
  CHECK(best_i == grid.size() / 2);
}

TEST_CASE("average vs phase curve") {
  const int n = 256, v = 1;
  auto grid = default_phi_grid(128);
  auto curve = average_vs_phase(n, v, grid);
  REQUIRE(curve.points.size() == grid.size());
  CHECK(curve.blind_average == doctest::Approx(256.0));
  CHECK(curve.memory_average == doctest::Approx(128.5));

  // Minimum at phi = pi; beats the with-memory classical average there.
  double best = 1e300;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < curve.points.size(); ++i)
    if (curve.points[i].n_bar < best) {
      best = curve.points[i].n_bar;
      best_i = i;
    }
  CHECK(best_i == grid.size() / 2);
  CHECK(best < curve.memory_average);

  for (std::size_t i = 1; i < grid.size(); ++i)
    CHECK(std::abs(curve.points[i].n_bar -
                   curve.points[grid.size() - i].n_bar) <= 1e-9);

  // Never slower than the blind classical search (5% numerical headroom).
  for (const auto& p : curve.points)
    CHECK(p.n_bar <= curve.blind_average * 1.05);
}

TEST_CASE("bipartite split probabilities") {
  // bipartite_step_count counts two-step-operator applications; the walk
  // itself runs for twice as many steps.
  // Symmetric case: the split is (1/2, 1/2) at the predicted step.
  {
    const int n1 = 64, n2 = 64;
    auto g = bipartite_graph(n1, n2, 1, 1);
    StepOperator op(g, kPi);
    const int steps = 2 * bipartite_step_count(n1, n2, 1, 1);
    auto psi = op.evolve(uniform_initial_state(g, op.index()), steps);
    std::vector<char> set1(g.n, 0), set2(g.n, 0);
    set1[0] = 1;
    set2[n1] = 1;
    const double p1 = probability_incident_to(psi, op.index(), set1);
    const double p2 = probability_incident_to(psi, op.index(), set2);
    CHECK(p1 + p2 >= 0.95);
    CHECK(std::abs(p1 - 0.5) <= 0.02);
    CHECK(std::abs(p2 - 0.5) <= 0.02);
  }
  // Asymmetric case: conditioned on landing on a special-incident edge, the
  // split approaches (N2, N1)/(N1 + N2).
  {
    const int n1 = 16, n2 = 256;
    auto g = bipartite_graph(n1, n2, 1, 1);
    StepOperator op(g, kPi);
    const int steps = 2 * bipartite_step_count(n1, n2, 1, 1);
    auto psi = op.evolve(uniform_initial_state(g, op.index()), steps);
    std::vector<char> set1(g.n, 0), set2(g.n, 0);
    set1[0] = 1;
    set2[n1] = 1;
    const double p1 = probability_incident_to(psi, op.index(), set1);
    const double p2 = probability_incident_to(psi, op.index(), set2);
    CHECK(p1 + p2 >= 0.9);
    const double want1 = double(n2) / (n1 + n2);
    const double want2 = double(n1) / (n1 + n2);
    CHECK(std::abs(p1 / (p1 + p2) - want1) <= 0.03);
    CHECK(std::abs(p2 / (p1 + p2) - want2) <= 0.03);
  }
}

TEST_CASE("repetitions to find the rare-set special scale as N2/N1") {
  // Fix the walk length at the N1-determined peak; the expected number of
  // repetitions 1/P_set2 grows linearly with N2/N1.
  const int n1 = 32;
  for (int ratio : {2, 4, 8}) {
    const int n2 = n1 * ratio;
    auto g = bipartite_graph(n1, n2, 1, 1);
    StepOperator op(g, kPi);
    const int steps = 2 * bipartite_step_count(n1, n2, 1, 1);
    auto psi = op.evolve(uniform_initial_state(g, op.index()), steps);
    std::vector<char> set2(g.n, 0);
    set2[n1] = 1;
    const double p2 = probability_incident_to(psi, op.index(), set2);
    const double reps = 1.0 / p2;  // geometric-law expectation
    CHECK(reps / (1.0 + ratio) >= 0.8);
    CHECK(reps / (1.0 + ratio) <= 1.2);
  }
}

TEST_CASE("fast path refuses out-of-span starts") {
  // A complete-graph model cannot represent an entering-set state.
  CHECK_THROWS_AS(collapsed_fast_trace(complete_model(16, 1, kPi, false),
                                       StartState::EnteringSet2, 5),
                  std::invalid_argument);
}

TEST_CASE("traces are deterministic") {
  auto a = full_trace(complete_graph(48, 2), 2.1, 25);
  auto b = full_trace(complete_graph(48, 2), 2.1, 25);
  for (int m = 0; m <= 25; ++m) CHECK(a.incident[m] == b.incident[m]);
}
