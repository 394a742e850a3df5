// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "oracle_helpers.hpp"
#include "sqwalk/circuit.hpp"
#include "sqwalk/tolerances.hpp"

using namespace sqw;
using sqwtest::max_abs_diff;
using sqwtest::random_state;

namespace {
constexpr double kPi = std::numbers::pi;

CircuitState edge_basis(const Graph& g, const EdgeIndex& idx, int from,
                        int to) {
  WalkState psi;
  psi.amp = Eigen::VectorXcd::Zero(idx.size());
  psi.amp[idx.position(from, to)] = 1.0;
  return CircuitState::from_edge_state(g, idx, psi);
}
}  // namespace

TEST_CASE("oracle marks special vertices and is involutive") {
  auto g = complete_graph(4, 1);
  CircuitSimulator sim(g, kPi);
  const auto& idx = sim.index();

  // Put the vertex register on a special vertex by hand.
  CircuitState s(g, idx);
  s.amp[s.flat(idx.position(1, 0), /*vslot=*/0, /*anc=*/0)] = 1.0;
  auto flipped = sim.oracle_apply(s);
  CHECK(std::abs(flipped.amp[s.flat(idx.position(1, 0), 0, 1)] - 1.0) < 1e-15);
  CHECK(std::abs(flipped.amp[s.flat(idx.position(1, 0), 0, 0)]) == 0.0);
  auto twice = sim.oracle_apply(flipped);
  CHECK(max_abs_diff(twice.amp, s.amp) == 0.0);

  // Normal vertex and the reference slot are untouched (f(ref) = 0).
  CircuitState n(g, idx);
  n.amp[n.flat(0, 2, 0)] = 0.5;
  n.amp[n.flat(0, n.ref_slot(), 0)] = 0.5;
  auto same = sim.oracle_apply(n);
  CHECK(max_abs_diff(same.amp, n.amp) == 0.0);

  CHECK(sim.oracle_calls() == 3);
}

TEST_CASE("cw2 maps the reference slot to the edge head") {
  auto g = complete_graph(3, 1);
  CircuitSimulator sim(g, kPi);
  const auto& idx = sim.index();
  auto s = edge_basis(g, idx, 1, 2);
  auto out = sim.cw2_apply(s);
  CHECK(std::abs(out.amp[s.flat(idx.position(1, 2), 2, 0)] - 1.0) < 1e-15);
  // The underlying controlled swap is an involution: undoing it by hand
  // (swap head slot back to ref) restores the input.
  auto undone = out;
  for (int a = 0; a < 2; ++a)
    std::swap(undone.amp[s.flat(idx.position(1, 2), 2, a)],
              undone.amp[s.flat(idx.position(1, 2), s.ref_slot(), a)]);
  CHECK(max_abs_diff(undone.amp, s.amp) == 0.0);

  // Off-domain input is rejected.
  CircuitState bad(g, idx);
  bad.amp[bad.flat(0, 1, 0)] = 1.0;
  CHECK_THROWS_AS(sim.cw2_apply(bad), std::domain_error);
}

TEST_CASE("cw1 returns the tail-matched register to the reference slot") {
  auto g = complete_graph(3, 1);
  CircuitSimulator sim(g, kPi);
  const auto& idx = sim.index();
  CircuitState s(g, idx);
  s.amp[s.flat(idx.position(2, 0), /*vslot=*/2, 0)] = 1.0;  // |2,0> x |2>
  auto out = sim.cw1_apply(s);
  CHECK(std::abs(out.amp[s.flat(idx.position(2, 0), s.ref_slot(), 0)] - 1.0) <
        1e-15);

  CircuitState bad(g, idx);
  bad.amp[bad.flat(idx.position(2, 0), 1, 0)] = 1.0;  // register != tail
  CHECK_THROWS_AS(sim.cw1_apply(bad), std::domain_error);
}

TEST_CASE("cuf scatters by the ancilla-selected rule") {
  auto g = complete_graph(3, 1);
  CircuitSimulator sim(g, kPi);
  const auto& idx = sim.index();

  // Ancilla 1, phi = pi: |k,l> -> e^{i pi}|l,k> = -|l,k>.
  CircuitState sp(g, idx);
  sp.amp[sp.flat(idx.position(2, 0), 0, 1)] = 1.0;
  auto rs = sim.cuf_apply(sp);
  CHECK(std::abs(rs.amp[sp.flat(idx.position(0, 2), 0, 1)] + 1.0) < 1e-15);

  // Ancilla 0, degree-2 head: perfect transmission to the other neighbor.
  CircuitState nm(g, idx);
  nm.amp[nm.flat(idx.position(0, 1), 1, 0)] = 1.0;
  auto rt = sim.cuf_apply(nm);
  CHECK(std::abs(rt.amp[nm.flat(idx.position(1, 2), 1, 0)] - 1.0) < 1e-15);

  // Mismatched vertex register is rejected.
  CircuitState bad(g, idx);
  bad.amp[bad.flat(idx.position(0, 1), 2, 0)] = 1.0;
  CHECK_THROWS_AS(sim.cuf_apply(bad), std::domain_error);
}

TEST_CASE("one circuit step equals one walk step") {
  auto g = complete_graph(3, 1);
  CircuitSimulator sim(g, kPi);
  StepOperator op(g, kPi);
  auto s = edge_basis(g, sim.index(), 1, 2);
  auto out = sim.step(s);
  auto edge = out.edge_component();  // throws unless ancillas are reset

  WalkState psi;
  psi.amp = Eigen::VectorXcd::Zero(sim.index().size());
  psi.amp[sim.index().position(1, 2)] = 1.0;
  auto want = op.apply(psi);
  CHECK(max_abs_diff(edge.amp, want.amp) <= tol::kCircuit);
  CHECK(sim.oracle_calls() == 2);
}

TEST_CASE("composed circuit steps track the walk for all families") {
  const std::vector<Graph> graphs = {complete_graph(5, 1),
                                     bipartite_graph(3, 3, 1, 1),
                                     mpartite_graph(3, 2)};
  for (const auto& g : graphs)
    for (double phi : {0.0, kPi / 2, kPi}) {
      CircuitSimulator sim(g, phi);
      StepOperator op(g, phi);
      auto psi = uniform_initial_state(g, sim.index());
      auto circ = CircuitState::from_edge_state(g, sim.index(), psi);
      for (int n = 1; n <= 20; ++n) {
        psi = op.apply(psi);
        circ = sim.step(circ);
        CHECK(std::abs(circ.norm() - 1.0) <= 1e-12);
        auto edge = circ.edge_component();
        CHECK(max_abs_diff(edge.amp, psi.amp) <= tol::kCircuit);
      }
      CHECK(sim.oracle_calls() == 2 * 20);
    }
}

TEST_CASE("ancilla reset is exact") {
  auto g = bipartite_graph(2, 3, 1, 1);
  CircuitSimulator sim(g, kPi / 3);
  auto psi = random_state(sim.index(), 17);
  auto circ = CircuitState::from_edge_state(g, sim.index(), psi);
  for (int n = 0; n < 10; ++n) circ = sim.step(circ);
  // Every amplitude off |ref>|0> is at floating-point-noise level.
  double stray = 0.0;
  for (std::size_t e = 0; e < circ.num_edges(); ++e)
    for (int v = 0; v < circ.num_vertex_slots(); ++v)
      for (int a = 0; a < 2; ++a)
        if (!(v == circ.ref_slot() && a == 0))
          stray += std::norm(circ.amp[circ.flat(e, v, a)]);
  CHECK(std::sqrt(stray) <= tol::kCircuit);
  CHECK_NOTHROW(circ.edge_component());
}

TEST_CASE("edge_component rejects non-reset ancillas") {
  auto g = complete_graph(3, 1);
  EdgeIndex idx(g);
  CircuitState s(g, idx);
  s.amp[s.flat(0, s.ref_slot(), 0)] = std::sqrt(0.5);
  s.amp[s.flat(0, 0, 1)] = std::sqrt(0.5);  // entangled leftover
  CHECK_THROWS_AS(s.edge_component(), std::domain_error);
}
