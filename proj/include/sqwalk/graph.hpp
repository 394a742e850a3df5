// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sqw {

enum class FamilyKind { None, Complete, Bipartite, MPartite };

/// Optional tag recording which named family a graph was built from,
/// together with the construction parameters.
struct Family {
  FamilyKind kind = FamilyKind::None;
  // Complete: n1 = N, v1 = v.
  // Bipartite: n1 = N1, n2 = N2, v1, v2.
  // MPartite: m_sets = M, n1 = N (per set), v1 = 1.
  int n1 = 0;
  int n2 = 0;
  int v1 = 0;
  int v2 = 0;
  int m_sets = 0;
};

/// Simple undirected graph with a designated set of special vertices.
/// Vertex ids are 0-based and contiguous. Immutable once built.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // undirected, first < second, sorted
  std::vector<char> special;               // per-vertex flag, size n
  Family family;
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  int degree(int l) const { return static_cast<int>(adj[l].size()); }
  bool is_special(int l) const { return special[l] != 0; }
  std::size_t num_edges() const { return edges.size(); }
  std::size_t num_directed_edges() const { return 2 * edges.size(); }

  const std::vector<int>& neighbors(int l) const;
  /// Gamma(l; k): neighbors of l excluding k. Throws if k is not adjacent to l.
  std::vector<int> neighbors_excluding(int l, int k) const;

  bool has_edge(int a, int b) const;

  /// For bipartite/M-partite graphs: the 0-based part a vertex belongs to.
  int part_of(int vertex) const;

  /// Checks structural invariants (no loops, no duplicates, special ids in
  /// range, family edge counts). Throws std::invalid_argument on violation.
  void validate() const;
};

/// Builds a graph from raw parts; sorts, deduplicates and validates.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges,
                 const std::vector<int>& specials, Family family = {});

Graph complete_graph(int n, int v);
Graph bipartite_graph(int n1, int n2, int v1, int v2);
Graph mpartite_graph(int m, int n, int v = 1);

/// Canonical ordering of directed edge states |from,to>. Lexicographic by
/// (from, to); bijective with positions 0..2|E|-1.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);

  std::size_t size() const { return dir_.size(); }
  std::pair<int, int> edge(std::size_t pos) const { return dir_[pos]; }
  int from(std::size_t pos) const { return dir_[pos].first; }
  int to(std::size_t pos) const { return dir_[pos].second; }

  /// Position of directed edge (from,to). Throws if absent.
  std::size_t position(int from, int to) const;
  /// Position of the reversed edge (to,from).
  std::size_t reverse(std::size_t pos) const { return rev_[pos]; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> dir_;
  std::vector<std::int32_t> lookup_;  // n*n table, -1 where absent
  std::vector<std::uint32_t> rev_;
};

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace sqw
