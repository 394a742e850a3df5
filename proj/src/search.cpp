// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/search.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sqwalk/tolerances.hpp"

namespace sqw {

ProbabilityTrace probability_trace(const StepOperator& op,
                                   const WalkState& init, int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  ProbabilityTrace tr;
  tr.incident.reserve(m_max + 1);
  tr.entering.reserve(m_max + 1);
  tr.leaving.reserve(m_max + 1);
  WalkState psi = init;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) psi = op.apply(psi);
    tr.incident.push_back(
        success_probability(psi, op.graph(), op.index(), Criterion::Incident));
    tr.entering.push_back(
        success_probability(psi, op.graph(), op.index(), Criterion::Entering));
    tr.leaving.push_back(
        success_probability(psi, op.graph(), op.index(), Criterion::Leaving));
  }
  return tr;
}

ProbabilityTrace collapsed_fast_trace(const CollapsedModel& model,
                                      StartState start, int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  Eigen::VectorXcd c = collapsed_initial(model, start);
  // For one-step models the named starts span the basis exactly; refuse if
  // the recorded coordinates visibly miss weight.
  const double missing = std::abs(1.0 - c.squaredNorm());
  if (model.step_multiplicity == 1 && missing > tol::kProjection)
    throw std::domain_error("initial state is outside the collapsed span");
  ProbabilityTrace tr;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) c = model.matrix * c;
    tr.incident.push_back(collapsed_probability(model, c, Criterion::Incident));
    tr.entering.push_back(collapsed_probability(model, c, Criterion::Entering));
    tr.leaving.push_back(collapsed_probability(model, c, Criterion::Leaving));
  }
  return tr;
}

double repetition_pmf(double p, std::int64_t k) {
  if (p <= 0.0 || p > 1.0)
    throw std::invalid_argument("repetition_pmf: need 0 < P <= 1");
  if (k < 1) throw std::invalid_argument("repetition_pmf: k >= 1");
  return std::pow(1.0 - p, double(k - 1)) * p;
}

OptimalSteps optimal_steps(const std::vector<double>& trace, CostModel cost) {
  if (trace.empty()) throw std::invalid_argument("empty trace");
  OptimalSteps out;
  out.measure_only = trace[0] > 0.0
                         ? 1.0 / trace[0]
                         : std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  int best_m = -1;
  const int m_lo = cost == CostModel::WalkOnly ? 1 : 0;
  for (int m = m_lo; m < static_cast<int>(trace.size()); ++m) {
    if (trace[m] <= 0.0) continue;
    const double steps = cost == CostModel::WalkOnly ? double(m) : m + 1.0;
    const double nbar = steps / trace[m];
    if (nbar < best) {  // ties break toward smaller m
      best = nbar;
      best_m = m;
    }
  }
  if (best_m < 0) throw std::domain_error("all-zero probability trace");
  out.m_opt = best_m;
  out.n_bar = best;
  return out;
}

PeakInfo peak(const std::vector<double>& trace) {
  PeakInfo pk;
  for (int m = 0; m < static_cast<int>(trace.size()); ++m)
    if (trace[m] > pk.p_peak) {
      pk.p_peak = trace[m];
      pk.m_peak = m;
    }
  return pk;
}

std::vector<double> default_phi_grid(int points) {
  if (points < 1) throw std::invalid_argument("need at least one grid point");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = 2.0 * std::numbers::pi * i / points;
  return grid;
}

int default_m_max(int n, int v) {
  return 4 * int(std::ceil(std::numbers::pi / (2.0 * theta_complete(n, v))));
}

SweepGrid phase_sweep(int n, int v, const std::vector<double>& phi_grid,
                      int m_max) {
  SweepGrid grid;
  grid.phis = phi_grid;
  grid.m_max = m_max;
  grid.traces.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    CollapsedModel model = complete_model(n, v, phi, /*materialize=*/false);
    grid.traces.push_back(
        collapsed_fast_trace(model, StartState::Uniform, m_max));
  }
  return grid;
}

AverageCurve average_vs_phase(int n, int v, const std::vector<double>& phi_grid,
                              CostModel cost, Criterion criterion, int m_max) {
  if (m_max < 0) m_max = default_m_max(n, v);
  AverageCurve curve;
  ClassicalSearchSpec spec{n, v};
  curve.blind_average = blind_average(spec);
  curve.memory_average = memory_average(spec);
  SweepGrid grid = phase_sweep(n, v, phi_grid, m_max);
  curve.points.reserve(phi_grid.size());
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    auto opt = optimal_steps(grid.traces[i].get(criterion), cost);
    curve.points.push_back({phi_grid[i], opt.m_opt, opt.n_bar});
  }
  return curve;
}

}  // namespace sqw
