// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <memory>

#include <Eigen/Dense>

#include "sqwalk/graph.hpp"
#include "sqwalk/tolerances.hpp"

namespace sqw {

using cxd = std::complex<double>;

/// Amplitude vector over directed edge states in EdgeIndex order.
struct WalkState {
  Eigen::VectorXcd amp;

  double norm() const { return amp.norm(); }
};

/// Reflection and transmission coefficients of one vertex.
/// Normal vertex of degree d: t = 2/d, r = 1 - t.
/// Special vertex: r = -e^{i phi}, t = 0.
struct ScatterCoeffs {
  cxd r;
  double t;
};

ScatterCoeffs scatter_coeffs(const Graph& g, int l, double phi);

enum class Criterion { Incident, Entering, Leaving };

/// One-step unitary of the scattering walk, applied implicitly in
/// O(sum_l deg l) per step. Immutable after construction.
class StepOperator {
 public:
  StepOperator(Graph g, double phi);

  const Graph& graph() const { return g_; }
  const EdgeIndex& index() const { return idx_; }
  double phi() const { return phi_; }
  const ScatterCoeffs& coeffs(int vertex) const { return coeffs_[vertex]; }

  WalkState apply(const WalkState& psi) const;
  WalkState evolve(const WalkState& psi, int n) const;

  /// Dense matrix whose column j is the image of basis vector j. Throws
  /// std::length_error above the dimension cap.
  Eigen::MatrixXcd materialize(std::size_t cap = tol::kDenseCap) const;

 private:
  Graph g_;
  EdgeIndex idx_;
  double phi_;
  std::vector<ScatterCoeffs> coeffs_;
};

WalkState uniform_initial_state(const Graph& g, const EdgeIndex& idx);

/// Equal superposition of directed edges whose head lies in the given part
/// (1 or 2) of a bipartite graph.
WalkState bipartite_entering_state(const Graph& g, const EdgeIndex& idx,
                                   int target_set);

double success_probability(const WalkState& psi, const Graph& g,
                           const EdgeIndex& idx,
                           Criterion criterion = Criterion::Incident);

/// Probability weight on directed edges with at least one endpoint in the
/// given vertex set.
double probability_incident_to(const WalkState& psi, const EdgeIndex& idx,
                               const std::vector<char>& vertex_set);

}  // namespace sqw
