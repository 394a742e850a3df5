// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqwalk/graph.hpp"
#include "sqwalk/walk.hpp"

namespace sqw {

/// One symmetric basis vector |w_j>: an equal-weight superposition of a set
/// of directed edges, weight 1/sqrt(d_j).
struct CollapsedBasisVector {
  std::string label;
  std::size_t dim = 0;            // d_j = number of member edges
  std::vector<std::size_t> members;  // EdgeIndex positions; empty if the
                                     // model was built without materialization
  bool head_special = false;
  bool tail_special = false;
  int head_part = 0;  // 0-based part of the head vertices (families with parts)
  int tail_part = 0;

  double weight() const { return 1.0 / std::sqrt(double(dim)); }
};

/// Invariant-subspace model of one walk: symmetric basis plus the small
/// unitary matrix that advances the walk inside the subspace.
struct CollapsedModel {
  Family family;
  double phi = 0.0;
  std::vector<CollapsedBasisVector> basis;
  Eigen::MatrixXcd matrix;
  int step_multiplicity = 1;  // 2 for the bipartite two-step model
  std::map<std::string, double> params;

  // Present when the basis members were materialized.
  std::optional<Graph> graph;
  std::optional<EdgeIndex> index;
  // True when the matrix was checked against the full-space engine.
  bool validated_small = false;

  bool materialized() const { return graph.has_value(); }
  std::size_t dim() const { return basis.size(); }
};

struct EigenSystem {
  Eigen::VectorXcd eigenvalues;   // unit modulus, sorted by phase angle
  Eigen::MatrixXcd eigenvectors;  // columns
  Eigen::VectorXcd overlaps;      // <u_lambda | c0>
};

/// Complete graph, basis (w1,w2,w3,w4); w4 is dropped for v = 1.
/// With materialize = false only counts and the matrix are built (used by
/// sweeps, where the basis edge lists are not needed).
CollapsedModel complete_model(int n, int v, double phi,
                              bool materialize = true);

/// Bipartite graph, one-step 8-dimensional model on
/// (w01,w02,w11,w12,w13,w21,w22,w23); empty basis vectors are dropped.
CollapsedModel bipartite_model(int n1, int n2, int v1, int v2, double phi,
                               bool materialize = true);

/// Two applications of the step operator restricted to the edges entering
/// set 2, basis (w21,w22,w23). Defined for phi = pi only.
CollapsedModel bipartite_two_step_model(int n1, int n2, int v1, int v2,
                                        bool materialize = true);

/// M-partite graph with one special vertex, basis (w1..w5). Requires M >= 3.
CollapsedModel mpartite_model(int m, int n, double phi,
                              bool materialize = true);

/// Components <w_j|psi> and the norm of the part of psi outside the span.
std::pair<Eigen::VectorXcd, double> project(const WalkState& psi,
                                            const CollapsedModel& model);

/// Full-space state sum_j c_j |w_j>.
WalkState lift(const CollapsedModel& model, const Eigen::VectorXcd& c);

EigenSystem eigensystem(const CollapsedModel& model,
                        const Eigen::VectorXcd& c0);

/// Spectral evolution of the collapsed coordinates; n counts applications of
/// the model matrix. Falls back to repeated multiplication if the matrix is
/// numerically defective.
Eigen::VectorXcd evolve_collapsed(const CollapsedModel& model,
                                  const Eigen::VectorXcd& c0, int n);

enum class StartState { Uniform, EnteringSet1, EnteringSet2 };

/// Collapsed coordinates of a named initial state, computed from the basis
/// dimensions (exact, residual zero for these states).
Eigen::VectorXcd collapsed_initial(const CollapsedModel& model,
                                   StartState start);

/// Probability of the given criterion read off the collapsed coordinates.
double collapsed_probability(const CollapsedModel& model,
                             const Eigen::VectorXcd& c, Criterion criterion);

/// Weight incident to special vertices of a given part (bipartite splits).
double collapsed_incident_to_part(const CollapsedModel& model,
                                  const Eigen::VectorXcd& c, int part);

// Closed-form asymptotics (phi = pi).
double theta_complete(int n, int v);
int predicted_steps_complete(int n, int v);
Eigen::Vector4d closed_form_complete(int n, int v, int steps);

/// theta = sqrt(2(x1+x2)) with x_j = 2 v_j / N_j; for v1 = v2 = 1 this is
/// the same as 2 sqrt(1/N1 + 1/N2).
double theta_bipartite(int n1, int n2, int v1, int v2);
/// round(pi / (2 theta)): the number of *two-step-operator applications*
/// that rotates the collapsed state onto the special-incident edges.  Each
/// application advances the rotation angle by theta, i.e. each walk step
/// advances it by theta / 2, so the peak sits near twice this many walk
/// steps.
int bipartite_step_count(int n1, int n2, int v1, int v2);
/// Amplitudes on (w21, w22, w23) after `steps` applications of the
/// two-step operator (2 * steps walk steps).
Eigen::Vector3d closed_form_bipartite(int n1, int n2, int v1, int v2,
                                      int steps);

double phase_angle_mpartite(int m, int n);
int predicted_steps_mpartite(int m, int n);
Eigen::VectorXd closed_form_mpartite(int m, int n, int steps);

std::string model_to_json(const CollapsedModel& model);

}  // namespace sqw
