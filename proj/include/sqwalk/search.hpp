// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "sqwalk/classical.hpp"
#include "sqwalk/collapsed.hpp"
#include "sqwalk/graph.hpp"
#include "sqwalk/walk.hpp"

namespace sqw {

/// Per-step success probabilities under all three measurement criteria.
struct ProbabilityTrace {
  std::vector<double> incident;
  std::vector<double> entering;
  std::vector<double> leaving;

  std::size_t size() const { return incident.size(); }
  const std::vector<double>& get(Criterion c) const {
    switch (c) {
      case Criterion::Entering: return entering;
      case Criterion::Leaving: return leaving;
      default: return incident;
    }
  }
};

enum class CostModel {
  WalkOnly,         // n(m) = m / P(m), minimized over m >= 1
  WalkPlusMeasure,  // n(m) = (m + 1) / P(m), minimized over m >= 0
};

struct OptimalSteps {
  int m_opt = 0;
  double n_bar = 0.0;
  /// Cost of measuring the untouched initial state, 1/P(0); reported
  /// separately since m = 0 is excluded from the WalkOnly minimizer.
  double measure_only = 0.0;
};

struct PeakInfo {
  int m_peak = 0;
  double p_peak = 0.0;
};

/// Full-space trace: P(m) for m = 0..m_max starting from the given state.
ProbabilityTrace probability_trace(const StepOperator& op,
                                   const WalkState& init, int m_max);

/// Collapsed-model trace; the initial state must be representable in the
/// model span (residual below tol::kProjection for materialized models).
ProbabilityTrace collapsed_fast_trace(const CollapsedModel& model,
                                      StartState start, int m_max);

/// P_{phi,m}(k) = [1 - P]^{k-1} P.
double repetition_pmf(double p, std::int64_t k);

OptimalSteps optimal_steps(const std::vector<double>& trace,
                           CostModel cost = CostModel::WalkOnly);

PeakInfo peak(const std::vector<double>& trace);

struct SweepGrid {
  std::vector<double> phis;
  int m_max = 0;
  // traces[i] corresponds to phis[i].
  std::vector<ProbabilityTrace> traces;
};

/// Complete-graph phase sweep over the given phi grid; uses the collapsed
/// fast path.
SweepGrid phase_sweep(int n, int v, const std::vector<double>& phi_grid,
                      int m_max);

std::vector<double> default_phi_grid(int points = 128);
int default_m_max(int n, int v);

struct AveragePoint {
  double phi = 0.0;
  int m_opt = 0;
  double n_bar = 0.0;
};

struct AverageCurve {
  std::vector<AveragePoint> points;
  double blind_average = 0.0;
  double memory_average = 0.0;
};

AverageCurve average_vs_phase(int n, int v, const std::vector<double>& phi_grid,
                              CostModel cost = CostModel::WalkOnly,
                              Criterion criterion = Criterion::Incident,
                              int m_max = -1);

}  // namespace sqw
