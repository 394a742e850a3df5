// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace sqw {

ScatterCoeffs scatter_coeffs(const Graph& g, int l, double phi) {
  if (l < 0 || l >= g.n) throw std::invalid_argument("vertex id out of range");
  if (g.degree(l) == 0)
    throw std::invalid_argument("isolated vertex has no scattering rule");
  if (g.is_special(l))
    return {-std::exp(cxd(0.0, phi)), 0.0};
  double t = 2.0 / g.degree(l);
  return {cxd(1.0 - t, 0.0), t};
}

StepOperator::StepOperator(Graph g, double phi)
    : g_(std::move(g)), idx_(g_), phi_(phi) {
  coeffs_.reserve(g_.n);
  for (int l = 0; l < g_.n; ++l) coeffs_.push_back(scatter_coeffs(g_, l, phi));
}

WalkState StepOperator::apply(const WalkState& psi) const {
  const std::size_t dim = idx_.size();
  if (static_cast<std::size_t>(psi.amp.size()) != dim)
    throw std::invalid_argument("state dimension does not match operator");

  // Incoming sum per vertex: S(l) = sum_k <k,l|psi>.
  Eigen::VectorXcd per_vertex = Eigen::VectorXcd::Zero(g_.n);
  for (std::size_t p = 0; p < dim; ++p) per_vertex[idx_.to(p)] += psi.amp[p];

  // out(l,m) = t_l S(l) - (t_l + r_l) in(m,l); the special case t=0,
  // r=-e^{i phi} reduces to out(l,m) = e^{i phi} in(m,l).
  WalkState out;
  out.amp.resize(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const int l = idx_.from(p);
    const auto& c = coeffs_[l];
    out.amp[p] = c.t * per_vertex[l] - (c.t + c.r) * psi.amp[idx_.reverse(p)];
  }
  return out;
}

WalkState StepOperator::evolve(const WalkState& psi, int n) const {
  if (n < 0) throw std::invalid_argument("negative step count");
  WalkState s = psi;
  for (int i = 0; i < n; ++i) s = apply(s);
  return s;
}

Eigen::MatrixXcd StepOperator::materialize(std::size_t cap) const {
  const std::size_t dim = idx_.size();
  if (dim > cap)
    throw std::length_error("step operator too large to materialize");
  Eigen::MatrixXcd u(dim, dim);
  WalkState basis;
  basis.amp = Eigen::VectorXcd::Zero(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    basis.amp[j] = 1.0;
    u.col(j) = apply(basis).amp;
    basis.amp[j] = 0.0;
  }
  return u;
}

WalkState uniform_initial_state(const Graph& g, const EdgeIndex& idx) {
  if (g.num_edges() == 0) throw std::invalid_argument("graph has no edges");
  WalkState s;
  s.amp = Eigen::VectorXcd::Constant(idx.size(),
                                     1.0 / std::sqrt(double(idx.size())));
  return s;
}

WalkState bipartite_entering_state(const Graph& g, const EdgeIndex& idx,
                                   int target_set) {
  if (g.family.kind != FamilyKind::Bipartite)
    throw std::invalid_argument("entering state requires a bipartite graph");
  if (target_set != 1 && target_set != 2)
    throw std::invalid_argument("target set must be 1 or 2");
  WalkState s;
  s.amp = Eigen::VectorXcd::Zero(idx.size());
  std::size_t count = 0;
  for (std::size_t p = 0; p < idx.size(); ++p)
    if (g.part_of(idx.to(p)) == target_set - 1) ++count;
  const double a = 1.0 / std::sqrt(double(count));
  for (std::size_t p = 0; p < idx.size(); ++p)
    if (g.part_of(idx.to(p)) == target_set - 1) s.amp[p] = a;
  return s;
}

double success_probability(const WalkState& psi, const Graph& g,
                           const EdgeIndex& idx, Criterion criterion) {
  double p = 0.0;
  for (std::size_t e = 0; e < idx.size(); ++e) {
    const bool head = g.is_special(idx.to(e));
    const bool tail = g.is_special(idx.from(e));
    bool hit = false;
    switch (criterion) {
      case Criterion::Incident: hit = head || tail; break;
      case Criterion::Entering: hit = head; break;
      case Criterion::Leaving: hit = tail; break;
    }
    if (hit) p += std::norm(psi.amp[e]);
  }
  return p;
}

double probability_incident_to(const WalkState& psi, const EdgeIndex& idx,
                               const std::vector<char>& vertex_set) {
  double p = 0.0;
  for (std::size_t e = 0; e < idx.size(); ++e)
    if (vertex_set[idx.to(e)] || vertex_set[idx.from(e)])
      p += std::norm(psi.amp[e]);
  return p;
}

}  // namespace sqw
