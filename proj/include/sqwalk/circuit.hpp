// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "sqwalk/graph.hpp"
#include "sqwalk/walk.hpp"

namespace sqw {

/// Oracle f: vertex -> {0,1}; 1 exactly on the special vertices. The
/// reference slot of the vertex register maps to 0.
struct OracleFunction {
  std::vector<char> marks;  // per vertex

  static OracleFunction from_graph(const Graph& g) { return {g.special}; }
  int operator()(int vertex_or_ref) const {
    if (vertex_or_ref == static_cast<int>(marks.size())) return 0;  // |ref>
    return marks.at(vertex_or_ref);
  }
};

/// State on (edge register) x (vertex register with N+1 slots) x (ancilla
/// qubit). Slot N of the vertex register is the distinguished reference
/// state, kept separate from vertex id 0 to avoid overloading it.
class CircuitState {
 public:
  CircuitState(const Graph& g, const EdgeIndex& idx);

  /// psi (edge space) tensor |ref> tensor |0>.
  static CircuitState from_edge_state(const Graph& g, const EdgeIndex& idx,
                                      const WalkState& psi);

  std::size_t num_edges() const { return n_edges_; }
  int num_vertex_slots() const { return n_slots_; }
  int ref_slot() const { return n_slots_ - 1; }

  std::size_t flat(std::size_t edge, int vslot, int anc) const {
    return (edge * n_slots_ + vslot) * 2 + anc;
  }

  Eigen::VectorXcd amp;

  double norm() const { return amp.norm(); }
  /// Edge-space component against |ref>|0>; throws if the ancillas are not
  /// exactly reset (beyond floating-point noise).
  WalkState edge_component() const;

 private:
  std::size_t n_edges_ = 0;
  int n_slots_ = 0;
};

/// Walk-step pipeline on the tensor space, with oracle-call bookkeeping.
class CircuitSimulator {
 public:
  CircuitSimulator(Graph g, double phi);

  const Graph& graph() const { return g_; }
  const EdgeIndex& index() const { return idx_; }
  long long oracle_calls() const { return oracle_calls_; }

  /// Ancilla bit gets XORed with f(vertex register); involutive.
  CircuitState oracle_apply(const CircuitState& s);
  /// |m,l> (x) |ref>  ->  |m,l> (x) |l>  (controlled swap ref <-> head).
  CircuitState cw2_apply(const CircuitState& s) const;
  /// |l,m> (x) |l>  ->  |l,m> (x) |ref>  (controlled swap ref <-> tail).
  CircuitState cw1_apply(const CircuitState& s) const;
  /// Scatters the edge register with coefficients selected by the ancilla
  /// bit (0: normal rule, 1: special rule with this circuit's phi). Every
  /// nonzero amplitude must have vertex register = head of edge register.
  CircuitState cuf_apply(const CircuitState& s) const;

  /// CW1 . oracle . CU_f . oracle . CW2; one walk step, ancillas reset.
  CircuitState step(const CircuitState& s);

 private:
  Graph g_;
  EdgeIndex idx_;
  double phi_;
  OracleFunction f_;
  long long oracle_calls_ = 0;
};

}  // namespace sqw
