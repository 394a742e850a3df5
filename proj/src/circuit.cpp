// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "sqwalk/tolerances.hpp"

namespace sqw {

CircuitState::CircuitState(const Graph& g, const EdgeIndex& idx)
    : n_edges_(idx.size()), n_slots_(g.n + 1) {
  amp = Eigen::VectorXcd::Zero(n_edges_ * n_slots_ * 2);
}

CircuitState CircuitState::from_edge_state(const Graph& g,
                                           const EdgeIndex& idx,
                                           const WalkState& psi) {
  CircuitState s(g, idx);
  for (std::size_t e = 0; e < s.n_edges_; ++e)
    s.amp[s.flat(e, s.ref_slot(), 0)] = psi.amp[e];
  return s;
}

WalkState CircuitState::edge_component() const {
  WalkState out;
  out.amp = Eigen::VectorXcd::Zero(n_edges_);
  double stray = 0.0;
  for (std::size_t e = 0; e < n_edges_; ++e)
    for (int v = 0; v < n_slots_; ++v)
      for (int a = 0; a < 2; ++a) {
        const cxd x = amp[flat(e, v, a)];
        if (v == ref_slot() && a == 0)
          out.amp[e] = x;
        else
          stray += std::norm(x);
      }
  if (std::sqrt(stray) > tol::kCircuit)
    throw std::domain_error("ancillas are not reset to |ref>|0>");
  return out;
}

CircuitSimulator::CircuitSimulator(Graph g, double phi)
    : g_(std::move(g)), idx_(g_), phi_(phi), f_(OracleFunction::from_graph(g_)) {}

CircuitState CircuitSimulator::oracle_apply(const CircuitState& s) {
  ++oracle_calls_;
  CircuitState out = s;
  for (std::size_t e = 0; e < s.num_edges(); ++e)
    for (int v = 0; v < s.num_vertex_slots(); ++v)
      if (f_(v)) {
        std::swap(out.amp[out.flat(e, v, 0)], out.amp[out.flat(e, v, 1)]);
      }
  return out;
}

CircuitState CircuitSimulator::cw2_apply(const CircuitState& s) const {
  // Domain: vertex register in the reference slot.
  for (std::size_t e = 0; e < s.num_edges(); ++e)
    for (int v = 0; v < s.num_vertex_slots() - 1; ++v)
      for (int a = 0; a < 2; ++a)
        if (std::abs(s.amp[s.flat(e, v, a)]) > tol::kAmplitudeZero)
          throw std::domain_error("cw2: vertex register is not |ref>");
  CircuitState out = s;
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const int head = idx_.to(e);
    for (int a = 0; a < 2; ++a)
      std::swap(out.amp[out.flat(e, s.ref_slot(), a)],
                out.amp[out.flat(e, head, a)]);
  }
  return out;
}

CircuitState CircuitSimulator::cw1_apply(const CircuitState& s) const {
  // Domain: vertex register equals the tail of the edge register.
  for (std::size_t e = 0; e < s.num_edges(); ++e)
    for (int v = 0; v < s.num_vertex_slots(); ++v)
      if (v != idx_.from(e))
        for (int a = 0; a < 2; ++a)
          if (std::abs(s.amp[s.flat(e, v, a)]) > tol::kAmplitudeZero)
            throw std::domain_error(
                "cw1: vertex register does not match the edge tail");
  CircuitState out = s;
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const int tail = idx_.from(e);
    for (int a = 0; a < 2; ++a)
      std::swap(out.amp[out.flat(e, s.ref_slot(), a)],
                out.amp[out.flat(e, tail, a)]);
  }
  return out;
}

CircuitState CircuitSimulator::cuf_apply(const CircuitState& s) const {
  CircuitState out(g_, idx_);
  out.amp.setZero();
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const int k = idx_.from(e);
    const int l = idx_.to(e);
    for (int v = 0; v < s.num_vertex_slots(); ++v)
      for (int a = 0; a < 2; ++a) {
        const cxd x = s.amp[s.flat(e, v, a)];
        if (std::abs(x) <= tol::kAmplitudeZero) continue;
        if (v != l)
          throw std::domain_error(
              "cuf: vertex register does not match the edge head");
        cxd r;
        double t;
        if (a == 1) {
          r = -std::exp(cxd(0.0, phi_));
          t = 0.0;
        } else {
          t = 2.0 / g_.degree(l);
          r = 1.0 - t;
        }
        out.amp[out.flat(idx_.reverse(e), v, a)] += -r * x;
        if (t != 0.0)
          for (int m : g_.adj[l])
            if (m != k) out.amp[out.flat(idx_.position(l, m), v, a)] += t * x;
      }
  }
  return out;
}

CircuitState CircuitSimulator::step(const CircuitState& s) {
  return cw1_apply(oracle_apply(cuf_apply(oracle_apply(cw2_apply(s)))));
}

}  // namespace sqw
