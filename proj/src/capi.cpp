// SPDX-License-Identifier: Apache-2.0
#include "sqw.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqwalk/classical.hpp"
#include "sqwalk/collapsed.hpp"
#include "sqwalk/circuit.hpp"
#include "sqwalk/graph.hpp"
#include "sqwalk/search.hpp"
#include "sqwalk/tolerances.hpp"
#include "sqwalk/walk.hpp"

struct sqw_graph {
  sqw::Graph g;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(SQW_ERR_INVALID, e.what());
  } catch (const std::domain_error& e) {
    return fail(SQW_ERR_DOMAIN, e.what());
  } catch (const std::length_error& e) {
    return fail(SQW_ERR_TOO_LARGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQW_ERR_INTERNAL, e.what());
  }
}

int make_graph_handle(sqw::Graph g, sqw_graph** out) {
  if (!out) return fail(SQW_ERR_INVALID, "null output pointer");
  *out = new sqw_graph{std::move(g)};
  return SQW_OK;
}

sqw::StartState to_start(int start) {
  switch (start) {
    case SQW_START_UNIFORM: return sqw::StartState::Uniform;
    case SQW_START_ENTERING_SET1: return sqw::StartState::EnteringSet1;
    case SQW_START_ENTERING_SET2: return sqw::StartState::EnteringSet2;
    default: throw std::invalid_argument("unknown start state");
  }
}

sqw::WalkState full_start(const sqw::Graph& g, const sqw::EdgeIndex& idx,
                          int start) {
  switch (start) {
    case SQW_START_UNIFORM: return sqw::uniform_initial_state(g, idx);
    case SQW_START_ENTERING_SET1: return sqw::bipartite_entering_state(g, idx, 1);
    case SQW_START_ENTERING_SET2: return sqw::bipartite_entering_state(g, idx, 2);
    default: throw std::invalid_argument("unknown start state");
  }
}

sqw::CollapsedModel model_for(const sqw::Graph& g, double phi,
                              bool materialize) {
  const auto& f = g.family;
  switch (f.kind) {
    case sqw::FamilyKind::Complete:
      return sqw::complete_model(f.n1, f.v1, phi, materialize);
    case sqw::FamilyKind::Bipartite:
      return sqw::bipartite_model(f.n1, f.n2, f.v1, f.v2, phi, materialize);
    case sqw::FamilyKind::MPartite:
      if (f.m_sets == 2)
        return sqw::bipartite_model(f.n1, f.n1, 1, 0, phi, materialize);
      return sqw::mpartite_model(f.m_sets, f.n1, phi, materialize);
    default:
      throw std::invalid_argument(
          "graph carries no family tag; collapsed model unavailable");
  }
}

}  // namespace

extern "C" {

const char* sqw_last_error(void) { return g_last_error.c_str(); }

int sqw_graph_complete(int n, int v, sqw_graph** out) {
  return guarded([&] { return make_graph_handle(sqw::complete_graph(n, v), out); });
}

int sqw_graph_bipartite(int n1, int n2, int v1, int v2, sqw_graph** out) {
  return guarded(
      [&] { return make_graph_handle(sqw::bipartite_graph(n1, n2, v1, v2), out); });
}

int sqw_graph_mpartite(int m, int n, sqw_graph** out) {
  return guarded([&] { return make_graph_handle(sqw::mpartite_graph(m, n), out); });
}

int sqw_graph_from_json(const char* json_text, sqw_graph** out) {
  return guarded([&] {
    if (!json_text) return fail(SQW_ERR_INVALID, "null json text");
    return make_graph_handle(sqw::graph_from_json(json_text), out);
  });
}

void sqw_graph_free(sqw_graph* g) { delete g; }

int sqw_graph_num_vertices(const sqw_graph* g) { return g ? g->g.n : 0; }
int sqw_graph_num_edges(const sqw_graph* g) {
  return g ? static_cast<int>(g->g.num_edges()) : 0;
}
int sqw_graph_num_edge_states(const sqw_graph* g) {
  return g ? static_cast<int>(g->g.num_directed_edges()) : 0;
}

int sqw_graph_to_json(const sqw_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(SQW_ERR_INVALID, "null argument");
    const std::string text = sqw::graph_to_json(g->g);
    *out = new char[text.size() + 1];
    std::memcpy(*out, text.c_str(), text.size() + 1);
    return SQW_OK;
  });
}

void sqw_string_free(char* s) { delete[] s; }

int sqw_trace(const sqw_graph* g, double phi, int start, int m_max, int fast,
              double* p_incident, double* p_entering, double* p_leaving) {
  return guarded([&] {
    if (!g || !p_incident || !p_entering || !p_leaving)
      return fail(SQW_ERR_INVALID, "null argument");
    sqw::ProbabilityTrace tr;
    if (fast) {
      auto model = model_for(g->g, phi, /*materialize=*/false);
      tr = sqw::collapsed_fast_trace(model, to_start(start), m_max);
    } else {
      sqw::StepOperator op(g->g, phi);
      tr = sqw::probability_trace(op, full_start(op.graph(), op.index(), start),
                                  m_max);
    }
    for (int m = 0; m <= m_max; ++m) {
      p_incident[m] = tr.incident[m];
      p_entering[m] = tr.entering[m];
      p_leaving[m] = tr.leaving[m];
    }
    return SQW_OK;
  });
}

int sqw_incident_split(const sqw_graph* g, double phi, int start, int m,
                       double* p_set1, double* p_set2) {
  return guarded([&] {
    if (!g || !p_set1 || !p_set2) return fail(SQW_ERR_INVALID, "null argument");
    if (g->g.family.kind != sqw::FamilyKind::Bipartite)
      return fail(SQW_ERR_INVALID, "incident split requires a bipartite graph");
    sqw::StepOperator op(g->g, phi);
    auto psi = op.evolve(full_start(op.graph(), op.index(), start), m);
    std::vector<char> set1(g->g.n, 0), set2(g->g.n, 0);
    for (int v = 0; v < g->g.n; ++v)
      if (g->g.is_special(v)) (g->g.part_of(v) == 0 ? set1 : set2)[v] = 1;
    *p_set1 = sqw::probability_incident_to(psi, op.index(), set1);
    *p_set2 = sqw::probability_incident_to(psi, op.index(), set2);
    return SQW_OK;
  });
}

int sqw_sweep(int n, int v, const double* phis, int n_phi, int m_max,
              double* out) {
  return guarded([&] {
    if (!phis || !out || n_phi < 1)
      return fail(SQW_ERR_INVALID, "invalid sweep arguments");
    std::vector<double> grid(phis, phis + n_phi);
    auto sweep = sqw::phase_sweep(n, v, grid, m_max);
    for (int i = 0; i < n_phi; ++i)
      for (int m = 0; m <= m_max; ++m) {
        const std::size_t base = (std::size_t(i) * (m_max + 1) + m) * 3;
        out[base + 0] = sweep.traces[i].incident[m];
        out[base + 1] = sweep.traces[i].entering[m];
        out[base + 2] = sweep.traces[i].leaving[m];
      }
    return SQW_OK;
  });
}

int sqw_optimal_steps(const double* trace, int len, int cost_model, int* m_opt,
                      double* n_bar) {
  return guarded([&] {
    if (!trace || len < 1 || !m_opt || !n_bar)
      return fail(SQW_ERR_INVALID, "invalid arguments");
    std::vector<double> tr(trace, trace + len);
    auto cost = cost_model == SQW_COST_WALK_PLUS_MEASURE
                    ? sqw::CostModel::WalkPlusMeasure
                    : sqw::CostModel::WalkOnly;
    auto opt = sqw::optimal_steps(tr, cost);
    *m_opt = opt.m_opt;
    *n_bar = opt.n_bar;
    return SQW_OK;
  });
}

int sqw_trace_peak(const double* trace, int len, int* m_peak, double* p_peak) {
  return guarded([&] {
    if (!trace || len < 1 || !m_peak || !p_peak)
      return fail(SQW_ERR_INVALID, "invalid arguments");
    auto pk = sqw::peak(std::vector<double>(trace, trace + len));
    *m_peak = pk.m_peak;
    *p_peak = pk.p_peak;
    return SQW_OK;
  });
}

int sqw_theta_complete(int n, int v, double* theta) {
  return guarded([&] {
    if (!theta) return fail(SQW_ERR_INVALID, "null output");
    *theta = sqw::theta_complete(n, v);
    return SQW_OK;
  });
}

int sqw_predicted_steps_complete(int n, int v, int* steps) {
  return guarded([&] {
    if (!steps) return fail(SQW_ERR_INVALID, "null output");
    *steps = sqw::predicted_steps_complete(n, v);
    return SQW_OK;
  });
}

int sqw_predicted_steps_bipartite(int n1, int n2, int v1, int v2, int* steps) {
  return guarded([&] {
    if (!steps) return fail(SQW_ERR_INVALID, "null output");
    *steps = sqw::bipartite_step_count(n1, n2, v1, v2);
    return SQW_OK;
  });
}

int sqw_predicted_steps_mpartite(int m, int n, int* steps) {
  return guarded([&] {
    if (!steps) return fail(SQW_ERR_INVALID, "null output");
    *steps = sqw::predicted_steps_mpartite(m, n);
    return SQW_OK;
  });
}

int sqw_classical_average(int variant, int n, int v, double* average) {
  return guarded([&] {
    if (!average) return fail(SQW_ERR_INVALID, "null output");
    sqw::ClassicalSearchSpec spec{n, v,
                                  variant == SQW_CLASSICAL_MEMORY
                                      ? sqw::SearchVariant::Memory
                                      : sqw::SearchVariant::Blind};
    *average = spec.variant == sqw::SearchVariant::Memory
                   ? sqw::memory_average(spec)
                   : sqw::blind_average(spec);
    return SQW_OK;
  });
}

int sqw_classical_monte_carlo(int variant, int n, int v, int64_t trials,
                              uint64_t seed, double* mean,
                              double* stderr_out) {
  return guarded([&] {
    if (!mean || !stderr_out) return fail(SQW_ERR_INVALID, "null output");
    sqw::ClassicalSearchSpec spec{n, v,
                                  variant == SQW_CLASSICAL_MEMORY
                                      ? sqw::SearchVariant::Memory
                                      : sqw::SearchVariant::Blind};
    auto res = sqw::monte_carlo_average(spec, trials, seed);
    *mean = res.mean;
    *stderr_out = res.stderr_;
    return SQW_OK;
  });
}

int sqw_verify_collapse(const sqw_graph* g, double phi, int steps,
                        double* max_abs_dev) {
  return guarded([&] {
    if (!g || !max_abs_dev || steps < 0)
      return fail(SQW_ERR_INVALID, "invalid arguments");
    auto model = model_for(g->g, phi, /*materialize=*/true);
    if (!model.materialized())
      return fail(SQW_ERR_TOO_LARGE, "graph too large to project");
    sqw::StepOperator op(*model.graph, phi);
    auto psi = sqw::uniform_initial_state(op.graph(), op.index());
    auto [c, residual] = sqw::project(psi, model);
    double dev = residual;
    for (int m = 1; m <= steps; ++m) {
      psi = op.apply(psi);
      if (m % model.step_multiplicity != 0) continue;
      auto [cm, res] = sqw::project(psi, model);
      auto ce = sqw::evolve_collapsed(model, c, m / model.step_multiplicity);
      dev = std::max(dev, res);
      dev = std::max(dev, (cm - ce).cwiseAbs().maxCoeff());
    }
    *max_abs_dev = dev;
    if (dev > sqw::tol::kCollapse)
      return fail(SQW_ERR_VERIFY, "collapse equivalence deviation above tolerance");
    return SQW_OK;
  });
}

int sqw_verify_circuit(const sqw_graph* g, double phi, int steps,
                       double* max_abs_dev, long long* oracle_calls) {
  return guarded([&] {
    if (!g || !max_abs_dev || !oracle_calls || steps < 0)
      return fail(SQW_ERR_INVALID, "invalid arguments");
    sqw::StepOperator op(g->g, phi);
    sqw::CircuitSimulator sim(g->g, phi);
    auto psi = sqw::uniform_initial_state(op.graph(), op.index());
    auto circ =
        sqw::CircuitState::from_edge_state(sim.graph(), sim.index(), psi);
    double dev = 0.0;
    for (int m = 0; m < steps; ++m) {
      psi = op.apply(psi);
      circ = sim.step(circ);
      auto edge = circ.edge_component();
      dev = std::max(dev, (edge.amp - psi.amp).cwiseAbs().maxCoeff());
    }
    *max_abs_dev = dev;
    *oracle_calls = sim.oracle_calls();
    if (dev > sqw::tol::kCircuit)
      return fail(SQW_ERR_VERIFY, "circuit deviates from the walk operator");
    return SQW_OK;
  });
}

int sqw_model_json(const sqw_graph* g, double phi, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(SQW_ERR_INVALID, "null argument");
    auto model = model_for(g->g, phi, /*materialize=*/false);
    const std::string text = sqw::model_to_json(model);
    *out = new char[text.size() + 1];
    std::memcpy(*out, text.c_str(), text.size() + 1);
    return SQW_OK;
  });
}

}  // extern "C"
