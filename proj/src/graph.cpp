// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sqw {

const std::vector<int>& Graph::neighbors(int l) const {
  if (l < 0 || l >= n) throw std::invalid_argument("vertex id out of range");
  return adj[l];
}

std::vector<int> Graph::neighbors_excluding(int l, int k) const {
  const auto& nb = neighbors(l);
  if (!std::binary_search(nb.begin(), nb.end(), k))
    throw std::invalid_argument("neighbors_excluding: k is not adjacent to l");
  std::vector<int> out;
  out.reserve(nb.size() - 1);
  for (int m : nb)
    if (m != k) out.push_back(m);
  return out;
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

int Graph::part_of(int vertex) const {
  switch (family.kind) {
    case FamilyKind::Bipartite:
      return vertex < family.n1 ? 0 : 1;
    case FamilyKind::MPartite:
      return vertex / family.n1;
    default:
      return 0;
  }
}

void Graph::validate() const {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(special.size()) != n)
    throw std::invalid_argument("special flag size mismatch");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) throw std::invalid_argument("edge not normalized (a < b)");
    if (!seen.insert({a, b}).second) throw std::invalid_argument("duplicate edge");
  }
  const auto& f = family;
  switch (f.kind) {
    case FamilyKind::Complete: {
      std::size_t want = std::size_t(f.n1) * (f.n1 - 1) / 2;
      if (edges.size() != want)
        throw std::invalid_argument("complete family edge count mismatch");
      break;
    }
    case FamilyKind::Bipartite: {
      if (edges.size() != std::size_t(f.n1) * f.n2)
        throw std::invalid_argument("bipartite family edge count mismatch");
      for (auto [a, b] : edges)
        if ((a < f.n1) == (b < f.n1))
          throw std::invalid_argument("bipartite family has intra-set edge");
      break;
    }
    case FamilyKind::MPartite: {
      std::size_t want =
          std::size_t(f.n1) * f.n1 * f.m_sets * (f.m_sets - 1) / 2;
      if (edges.size() != want)
        throw std::invalid_argument("m-partite family edge count mismatch");
      for (auto [a, b] : edges)
        if (a / f.n1 == b / f.n1)
          throw std::invalid_argument("m-partite family has intra-set edge");
      break;
    }
    case FamilyKind::None:
      break;
  }
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges,
                 const std::vector<int>& specials, Family family) {
  Graph g;
  g.n = n;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.special.assign(n, 0);
  for (int s : specials) {
    if (s < 0 || s >= n)
      throw std::invalid_argument("special vertex id out of range");
    g.special[s] = 1;
  }
  g.family = family;
  g.adj.assign(n, {});
  g.validate();  // checks edge endpoints before adjacency construction
  for (auto [a, b] : g.edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

Graph complete_graph(int n, int v) {
  if (n < 2 || v < 1 || v > n)
    throw std::invalid_argument("complete_graph: need N >= 2 and 1 <= v <= N");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  std::vector<int> specials(v);
  for (int i = 0; i < v; ++i) specials[i] = i;
  Family f;
  f.kind = FamilyKind::Complete;
  f.n1 = n;
  f.v1 = v;
  return make_graph(n, std::move(edges), specials, f);
}

Graph bipartite_graph(int n1, int n2, int v1, int v2) {
  if (n1 < 1 || n2 < 1 || v1 < 0 || v2 < 0 || v1 > n1 || v2 > n2)
    throw std::invalid_argument("bipartite_graph: invalid counts");
  if (v1 + v2 < 1)
    throw std::invalid_argument("bipartite_graph: no special vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(n1) * n2);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
  std::vector<int> specials;
  for (int i = 0; i < v1; ++i) specials.push_back(i);
  for (int i = 0; i < v2; ++i) specials.push_back(n1 + i);
  Family f;
  f.kind = FamilyKind::Bipartite;
  f.n1 = n1;
  f.n2 = n2;
  f.v1 = v1;
  f.v2 = v2;
  return make_graph(n1 + n2, std::move(edges), specials, f);
}

Graph mpartite_graph(int m, int n, int v) {
  if (m < 2 || n < 1)
    throw std::invalid_argument("mpartite_graph: need M >= 2 and N >= 1");
  if (v != 1)
    throw std::invalid_argument(
        "mpartite_graph: only a single special vertex is supported");
  std::vector<std::pair<int, int>> edges;
  for (int ma = 0; ma < m; ++ma)
    for (int mb = ma + 1; mb < m; ++mb)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          edges.emplace_back(ma * n + a, mb * n + b);
  Family f;
  f.kind = FamilyKind::MPartite;
  f.m_sets = m;
  f.n1 = n;
  f.v1 = 1;
  return make_graph(m * n, std::move(edges), {0}, f);
}

EdgeIndex::EdgeIndex(const Graph& g) : n_(g.n) {
  dir_.reserve(g.num_directed_edges());
  for (int from = 0; from < g.n; ++from)
    for (int to : g.adj[from]) dir_.emplace_back(from, to);
  lookup_.assign(std::size_t(n_) * n_, -1);
  for (std::size_t p = 0; p < dir_.size(); ++p)
    lookup_[std::size_t(dir_[p].first) * n_ + dir_[p].second] =
        static_cast<std::int32_t>(p);
  rev_.resize(dir_.size());
  for (std::size_t p = 0; p < dir_.size(); ++p)
    rev_[p] = static_cast<std::uint32_t>(position(dir_[p].second, dir_[p].first));
}

std::size_t EdgeIndex::position(int from, int to) const {
  if (from < 0 || to < 0 || from >= n_ || to >= n_)
    throw std::invalid_argument("EdgeIndex::position: vertex out of range");
  auto p = lookup_[std::size_t(from) * n_ + to];
  if (p < 0) throw std::invalid_argument("EdgeIndex::position: no such edge");
  return static_cast<std::size_t>(p);
}

namespace {

nlohmann::json family_to_json(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Complete:
      return {{"kind", "complete"}, {"N", f.n1}, {"v", f.v1}};
    case FamilyKind::Bipartite:
      return {{"kind", "bipartite"},
              {"N1", f.n1},
              {"N2", f.n2},
              {"v1", f.v1},
              {"v2", f.v2}};
    case FamilyKind::MPartite:
      return {{"kind", "mpartite"}, {"M", f.m_sets}, {"N", f.n1}, {"v", f.v1}};
    case FamilyKind::None:
      return nullptr;
  }
  return nullptr;
}

Family family_from_json(const nlohmann::json& j) {
  Family f;
  if (j.is_null()) return f;
  const std::string kind = j.at("kind");
  if (kind == "complete") {
    f.kind = FamilyKind::Complete;
    f.n1 = j.at("N");
    f.v1 = j.at("v");
  } else if (kind == "bipartite") {
    f.kind = FamilyKind::Bipartite;
    f.n1 = j.at("N1");
    f.n2 = j.at("N2");
    f.v1 = j.at("v1");
    f.v2 = j.at("v2");
  } else if (kind == "mpartite") {
    f.kind = FamilyKind::MPartite;
    f.m_sets = j.at("M");
    f.n1 = j.at("N");
    f.v1 = j.at("v");
  } else {
    throw std::invalid_argument("unknown graph family: " + kind);
  }
  return f;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["specials"] = nlohmann::json::array();
  for (int v = 0; v < g.n; ++v)
    if (g.special[v]) j["specials"].push_back(v);
  j["family"] = family_to_json(g.family);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<int> specials = j.at("specials").get<std::vector<int>>();
  Family f = family_from_json(j.value("family", nlohmann::json()));
  return make_graph(j.at("n").get<int>(), std::move(edges), specials, f);
}

}  // namespace sqw
