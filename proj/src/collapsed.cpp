// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/collapsed.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sqwalk/tolerances.hpp"

namespace sqw {

namespace {

constexpr double kPi = std::numbers::pi;

void drop_empty_vectors(std::vector<CollapsedBasisVector>& basis,
                        Eigen::MatrixXcd& matrix) {
  std::vector<int> keep;
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    if (basis[j].dim > 0) keep.push_back(j);
  if (keep.size() == basis.size()) return;
  Eigen::MatrixXcd reduced(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      reduced(i, j) = matrix(keep[i], keep[j]);
  std::vector<CollapsedBasisVector> kept;
  for (int j : keep) kept.push_back(std::move(basis[j]));
  basis = std::move(kept);
  matrix = std::move(reduced);
}

void check_unitary(const Eigen::MatrixXcd& m, const char* what) {
  if (m.size() == 0) return;
  Eigen::MatrixXcd gram = m.adjoint() * m;
  gram -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  if (gram.cwiseAbs().maxCoeff() > tol::kUnitarity) {
    std::ostringstream os;
    os << what << ": collapsed matrix is not unitary (max dev "
       << gram.cwiseAbs().maxCoeff() << ")";
    throw std::logic_error(os.str());
  }
}

std::size_t total_directed_edges(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Complete:
      return std::size_t(f.n1) * (f.n1 - 1);
    case FamilyKind::Bipartite:
      return 2 * std::size_t(f.n1) * f.n2;
    case FamilyKind::MPartite:
      return std::size_t(f.n1) * f.n1 * f.m_sets * (f.m_sets - 1);
    default:
      throw std::invalid_argument("collapsed model requires a graph family");
  }
}

Graph family_graph(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Complete:
      return complete_graph(f.n1, f.v1);
    case FamilyKind::Bipartite:
      return bipartite_graph(f.n1, f.n2, f.v1, f.v2);
    case FamilyKind::MPartite:
      return mpartite_graph(f.m_sets, f.n1, 1);
    default:
      throw std::invalid_argument("collapsed model requires a graph family");
  }
}

// Transcribed small matrices are checked against the full-space engine
// whenever the edge lists were materialized and the space is small; any
// mismatch is a transcription error and fails fast.
void validate_against_full(const CollapsedModel& model) {
  const auto& g = *model.graph;
  StepOperator op(g, model.phi);
  const std::size_t dim = model.dim();
  for (std::size_t j = 0; j < dim; ++j) {
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(dim);
    unit[j] = 1.0;
    WalkState w = lift(model, unit);
    for (int s = 0; s < model.step_multiplicity; ++s) w = op.apply(w);
    auto [col, residual] = project(w, model);
    double dev = (col - model.matrix.col(j)).cwiseAbs().maxCoeff();
    if (dev > 1e-11 || residual > 1e-11) {
      std::ostringstream os;
      os << "collapsed matrix column " << model.basis[j].label
         << " disagrees with the full-space engine (dev " << dev
         << ", residual " << residual << ")";
      throw std::logic_error(os.str());
    }
  }
}

void finalize(CollapsedModel& model, bool materialize) {
  drop_empty_vectors(model.basis, model.matrix);
  check_unitary(model.matrix, "collapsed model");
  const std::size_t full_dim = total_directed_edges(model.family);
  if (materialize && full_dim <= tol::kMaterializeCap) {
    model.graph = family_graph(model.family);
    model.index.emplace(*model.graph);
    for (auto& b : model.basis) b.members.reserve(b.dim);
  }
  if (model.materialized() && model.index->size() <= 4000)
    model.validated_small = true;
}

}  // namespace

CollapsedModel complete_model(int n, int v, double phi, bool materialize) {
  if (n < 2 || v < 1 || v >= n)
    throw std::invalid_argument("complete_model: need 1 <= v < N");
  CollapsedModel model;
  model.family = {FamilyKind::Complete, n, 0, v, 0, 0};
  model.phi = phi;

  const double t = 2.0 / (n - 1);
  const double q = -1.0 + 2.0 * v / (n - 1);
  const double s = std::sqrt(std::max(0.0, 1.0 - q * q));
  const cxd ph = std::exp(cxd(0.0, phi));

  CollapsedBasisVector w1{"w1", std::size_t(v) * (n - v), {}, true, false};
  CollapsedBasisVector w2{"w2", std::size_t(v) * (n - v), {}, false, true};
  CollapsedBasisVector w3{"w3", std::size_t(n - v) * (n - v - 1), {}, false,
                          false};
  CollapsedBasisVector w4{"w4", std::size_t(v) * (v - 1), {}, true, true};
  model.basis = {w1, w2, w3, w4};

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
  u(0, 1) = q;
  u(0, 2) = s;
  u(1, 0) = ph;
  u(2, 1) = s;
  u(2, 2) = -q;
  u(3, 3) = ph;
  model.matrix = std::move(u);

  model.params = {{"q", q},
                  {"s", s},
                  {"t", t},
                  {"theta", theta_complete(n, v)}};
  finalize(model, materialize);
  if (model.materialized()) {
    const auto& idx = *model.index;
    auto& b = model.basis;
    auto label_of = [&](const std::string& l) -> CollapsedBasisVector& {
      for (auto& x : b)
        if (x.label == l) return x;
      throw std::logic_error("missing basis vector " + l);
    };
    for (int a = v; a < n; ++a)
      for (int s2 = 0; s2 < v; ++s2) {
        label_of("w1").members.push_back(idx.position(a, s2));
        label_of("w2").members.push_back(idx.position(s2, a));
      }
    for (int a = v; a < n; ++a)
      for (int c = v; c < n; ++c)
        if (a != c) label_of("w3").members.push_back(idx.position(a, c));
    if (v >= 2)
      for (int a = 0; a < v; ++a)
        for (int c = 0; c < v; ++c)
          if (a != c) label_of("w4").members.push_back(idx.position(a, c));
    if (model.validated_small) validate_against_full(model);
  }
  return model;
}

namespace {

struct BipartiteCoeffs {
  double t1, r1, t2, r2, q1, s1, q2, s2, x1, x2;
};

BipartiteCoeffs bipartite_coeffs(int n1, int n2, int v1, int v2) {
  const int p1 = n1 - v1, p2 = n2 - v2;
  BipartiteCoeffs c{};
  c.t1 = 2.0 / n2;
  c.r1 = 1.0 - c.t1;
  c.t2 = 2.0 / n1;
  c.r2 = 1.0 - c.t2;
  c.q1 = -c.r1 + c.t1 * (v2 - 1);
  c.s1 = c.t1 * std::sqrt(double(v2) * p2);
  c.q2 = -c.r2 + c.t2 * (v1 - 1);
  c.s2 = c.t2 * std::sqrt(double(v1) * p1);
  c.x1 = 2.0 * v1 / n1;
  c.x2 = 2.0 * v2 / n2;
  return c;
}

void check_bipartite_args(int n1, int n2, int v1, int v2) {
  if (n1 < 1 || n2 < 1 || v1 < 0 || v2 < 0 || v1 > n1 || v2 > n2 ||
      v1 + v2 < 1)
    throw std::invalid_argument("bipartite model: invalid counts");
}

void bipartite_members(CollapsedModel& model) {
  const auto& f = model.family;
  const int n1 = f.n1, v1 = f.v1, n2 = f.n2, v2 = f.v2;
  const auto& idx = *model.index;
  auto find = [&](const std::string& l) -> CollapsedBasisVector* {
    for (auto& x : model.basis)
      if (x.label == l) return &x;
    return nullptr;
  };
  auto add = [&](const char* label, int from_lo, int from_hi, int to_lo,
                 int to_hi) {
    if (auto* bv = find(label))
      for (int a = from_lo; a < from_hi; ++a)
        for (int b = to_lo; b < to_hi; ++b)
          bv->members.push_back(idx.position(a, b));
  };
  // Set 1 occupies ids 0..n1-1 (specials first), set 2 ids n1..n1+n2-1.
  add("w01", n1, n1 + v2, 0, v1);
  add("w02", 0, v1, n1, n1 + v2);
  add("w11", n1 + v2, n1 + n2, 0, v1);
  add("w12", n1, n1 + v2, v1, n1);
  add("w13", n1 + v2, n1 + n2, v1, n1);
  add("w21", 0, v1, n1 + v2, n1 + n2);
  add("w22", v1, n1, n1, n1 + v2);
  add("w23", v1, n1, n1 + v2, n1 + n2);
}

}  // namespace

CollapsedModel bipartite_model(int n1, int n2, int v1, int v2, double phi,
                               bool materialize) {
  check_bipartite_args(n1, n2, v1, v2);
  const int p1 = n1 - v1, p2 = n2 - v2;
  const auto c = bipartite_coeffs(n1, n2, v1, v2);
  const cxd ph = std::exp(cxd(0.0, phi));

  CollapsedModel model;
  model.family = {FamilyKind::Bipartite, n1, n2, v1, v2, 0};
  model.phi = phi;
  model.basis = {
      {"w01", std::size_t(v1) * v2, {}, true, true, 0, 1},
      {"w02", std::size_t(v1) * v2, {}, true, true, 1, 0},
      {"w11", std::size_t(v1) * p2, {}, true, false, 0, 1},
      {"w12", std::size_t(v2) * p1, {}, false, true, 0, 1},
      {"w13", std::size_t(p1) * p2, {}, false, false, 0, 1},
      {"w21", std::size_t(v1) * p2, {}, false, true, 1, 0},
      {"w22", std::size_t(v2) * p1, {}, true, false, 1, 0},
      {"w23", std::size_t(p1) * p2, {}, false, false, 1, 0},
  };

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
  u(1, 0) = ph;                          // U w01 = e^{i phi} w02
  u(0, 1) = ph;                          // U w02 = e^{i phi} w01
  u(5, 2) = ph;                          // U w11 = e^{i phi} w21
  u(6, 3) = c.t1 * (v2 - 1) - c.r1;      // U w12 -> w22
  u(7, 3) = c.s1;                        //        -> w23
  u(6, 4) = c.s1;                        // U w13 -> w22
  u(7, 4) = c.t1 * (p2 - 1) - c.r1;      //        -> w23
  u(2, 5) = c.t2 * (v1 - 1) - c.r2;      // U w21 -> w11
  u(4, 5) = c.s2;                        //        -> w13
  u(3, 6) = ph;                          // U w22 = e^{i phi} w12
  u(2, 7) = c.s2;                        // U w23 -> w11
  u(4, 7) = c.t2 * (p1 - 1) - c.r2;      //        -> w13
  model.matrix = std::move(u);

  model.params = {{"q1", c.q1}, {"s1", c.s1}, {"q2", c.q2}, {"s2", c.s2},
                  {"x1", c.x1}, {"x2", c.x2}, {"t1", c.t1}, {"r1", c.r1},
                  {"t2", c.t2}, {"r2", c.r2},
                  {"theta", theta_bipartite(n1, n2, v1, v2)}};
  finalize(model, materialize);
  if (model.materialized()) {
    bipartite_members(model);
    if (model.validated_small) validate_against_full(model);
  }
  return model;
}

CollapsedModel bipartite_two_step_model(int n1, int n2, int v1, int v2,
                                        bool materialize) {
  check_bipartite_args(n1, n2, v1, v2);
  const int p1 = n1 - v1, p2 = n2 - v2;
  const auto c = bipartite_coeffs(n1, n2, v1, v2);

  CollapsedModel model;
  model.family = {FamilyKind::Bipartite, n1, n2, v1, v2, 0};
  model.phi = kPi;
  model.step_multiplicity = 2;
  model.basis = {
      {"w21", std::size_t(v1) * p2, {}, false, true, 1, 0},
      {"w22", std::size_t(v2) * p1, {}, true, false, 1, 0},
      {"w23", std::size_t(p1) * p2, {}, false, false, 1, 0},
  };
  Eigen::MatrixXcd m(3, 3);
  m << -c.q2, 0.0, -c.s2,
       c.s1 * c.s2, -c.q1, -c.q2 * c.s1,
       -c.q1 * c.s2, -c.s1, c.q1 * c.q2;
  model.matrix = std::move(m);
  model.params = {{"q1", c.q1}, {"s1", c.s1}, {"q2", c.q2}, {"s2", c.s2},
                  {"x1", c.x1}, {"x2", c.x2},
                  {"theta", theta_bipartite(n1, n2, v1, v2)}};
  finalize(model, materialize);
  if (model.materialized()) {
    bipartite_members(model);
    if (model.validated_small) validate_against_full(model);
  }
  return model;
}

CollapsedModel mpartite_model(int m, int n, double phi, bool materialize) {
  if (m < 3)
    throw std::invalid_argument(
        "mpartite_model: needs M >= 3 (use the bipartite model for M = 2)");
  if (n < 1) throw std::invalid_argument("mpartite_model: need N >= 1");

  const double t = 2.0 / (double(n) * (m - 1));
  const double r = 1.0 - t;
  const cxd ph = std::exp(cxd(0.0, phi));

  CollapsedModel model;
  model.family = {FamilyKind::MPartite, n, 0, 1, 0, m};
  model.phi = phi;
  model.basis = {
      {"w1", std::size_t(n) * (m - 1), {}, true, false},
      {"w2", std::size_t(n) * (m - 1), {}, false, true},
      {"w3", std::size_t(n) * (n - 1) * (m - 1), {}, false, false},
      {"w4", std::size_t(n) * (n - 1) * (m - 1), {}, false, false},
      {"w5", std::size_t(n) * n * (m - 1) * (m - 2), {}, false, false},
  };

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(5, 5);
  u(1, 0) = ph;                      // U w1 = e^{i phi} w2
  u(0, 1) = -r;                      // U w2 -> w1
  u(3, 1) = t * std::sqrt(double(n - 1));
  u(4, 1) = t * std::sqrt(double(n) * (m - 2));
  u(0, 2) = t * std::sqrt(double(n - 1));  // U w3 -> w1
  u(3, 2) = -double(std::size_t(n) * (m - 3) + 2) / (double(n) * (m - 1));
  u(4, 2) = t * std::sqrt(double(n) * (n - 1) * (m - 2));
  u(2, 3) = 1.0;                     // U w4 = w3
  u(0, 4) = t * std::sqrt(double(n) * (m - 2));  // U w5 -> w1
  u(3, 4) = t * std::sqrt(double(n) * (n - 1) * (m - 2));
  u(4, 4) = double(m - 3) / (m - 1);
  model.matrix = std::move(u);

  model.params = {{"t", t},
                  {"r", r},
                  {"phase_angle", phase_angle_mpartite(m, n)}};
  finalize(model, materialize);
  if (model.materialized()) {
    const auto& idx = *model.index;
    auto find = [&](const std::string& l) -> CollapsedBasisVector* {
      for (auto& x : model.basis)
        if (x.label == l) return &x;
      return nullptr;
    };
    auto vid = [&](int set, int i) { return set * n + i; };
    auto* w1 = find("w1");
    auto* w2 = find("w2");
    for (int ms = 1; ms < m; ++ms)
      for (int i = 0; i < n; ++i) {
        w1->members.push_back(idx.position(vid(ms, i), 0));
        w2->members.push_back(idx.position(0, vid(ms, i)));
      }
    if (auto* w3 = find("w3"))
      for (int ms = 1; ms < m; ++ms)
        for (int i1 = 1; i1 < n; ++i1)
          for (int i2 = 0; i2 < n; ++i2)
            w3->members.push_back(idx.position(vid(0, i1), vid(ms, i2)));
    if (auto* w4 = find("w4"))
      for (int ms = 1; ms < m; ++ms)
        for (int i1 = 1; i1 < n; ++i1)
          for (int i2 = 0; i2 < n; ++i2)
            w4->members.push_back(idx.position(vid(ms, i2), vid(0, i1)));
    if (auto* w5 = find("w5"))
      for (int m1 = 1; m1 < m; ++m1)
        for (int m2 = 1; m2 < m; ++m2) {
          if (m1 == m2) continue;
          for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
              w5->members.push_back(idx.position(vid(m1, i1), vid(m2, i2)));
        }
    if (model.validated_small) validate_against_full(model);
  }
  return model;
}

std::pair<Eigen::VectorXcd, double> project(const WalkState& psi,
                                            const CollapsedModel& model) {
  if (!model.materialized())
    throw std::domain_error("model basis was not materialized");
  Eigen::VectorXcd comps(model.dim());
  for (std::size_t j = 0; j < model.dim(); ++j) {
    cxd sum = 0.0;
    for (std::size_t p : model.basis[j].members) sum += psi.amp[p];
    comps[j] = model.basis[j].weight() * sum;
  }
  Eigen::VectorXcd rest = psi.amp;
  for (std::size_t j = 0; j < model.dim(); ++j) {
    const cxd a = comps[j] * model.basis[j].weight();
    for (std::size_t p : model.basis[j].members) rest[p] -= a;
  }
  return {comps, rest.norm()};
}

WalkState lift(const CollapsedModel& model, const Eigen::VectorXcd& c) {
  if (!model.materialized())
    throw std::domain_error("model basis was not materialized");
  WalkState s;
  s.amp = Eigen::VectorXcd::Zero(model.index->size());
  for (std::size_t j = 0; j < model.dim(); ++j) {
    const cxd a = c[j] * model.basis[j].weight();
    for (std::size_t p : model.basis[j].members) s.amp[p] += a;
  }
  return s;
}

EigenSystem eigensystem(const CollapsedModel& model,
                        const Eigen::VectorXcd& c0) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(model.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const auto dim = model.matrix.rows();
  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  auto phase = [&](int i) {
    double a = std::arg(solver.eigenvalues()[i]);
    return a < 0 ? a + 2 * kPi : a;
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return phase(a) < phase(b); });
  EigenSystem es;
  es.eigenvalues.resize(dim);
  es.eigenvectors.resize(dim, dim);
  es.overlaps.resize(dim);
  for (int i = 0; i < dim; ++i) {
    es.eigenvalues[i] = solver.eigenvalues()[order[i]];
    es.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
    es.overlaps[i] = es.eigenvectors.col(i).dot(c0);
  }
  return es;
}

Eigen::VectorXcd evolve_collapsed(const CollapsedModel& model,
                                  const Eigen::VectorXcd& c0, int n) {
  if (n < 0) throw std::invalid_argument("negative step count");
  if (static_cast<std::size_t>(c0.size()) != model.dim())
    throw std::invalid_argument("coordinate dimension mismatch");
  if (n == 0) return c0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(model.matrix);
  bool spectral_ok = solver.info() == Eigen::Success;
  Eigen::VectorXcd y;
  if (spectral_ok) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(solver.eigenvectors());
    y = lu.solve(c0);
    Eigen::MatrixXcd recon = solver.eigenvectors() *
                             solver.eigenvalues().asDiagonal() *
                             lu.solve(Eigen::MatrixXcd::Identity(
                                 model.matrix.rows(), model.matrix.cols()));
    if ((recon - model.matrix).cwiseAbs().maxCoeff() > 1e-11)
      spectral_ok = false;  // numerically defective; fall back
  }
  if (!spectral_ok) {
    Eigen::VectorXcd c = c0;
    for (int i = 0; i < n; ++i) c = model.matrix * c;
    return c;
  }
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y[i] *= std::pow(solver.eigenvalues()[i], double(n));
  return solver.eigenvectors() * y;
}

Eigen::VectorXcd collapsed_initial(const CollapsedModel& model,
                                   StartState start) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(model.dim());
  if (start == StartState::Uniform) {
    const double total = double(total_directed_edges(model.family));
    for (std::size_t j = 0; j < model.dim(); ++j)
      c[j] = std::sqrt(double(model.basis[j].dim) / total);
    return c;
  }
  if (model.family.kind != FamilyKind::Bipartite)
    throw std::invalid_argument("entering-set start requires bipartite family");
  const int part = start == StartState::EnteringSet1 ? 0 : 1;
  const double total = double(model.family.n1) * model.family.n2;
  for (std::size_t j = 0; j < model.dim(); ++j)
    if (model.basis[j].head_part == part)
      c[j] = std::sqrt(double(model.basis[j].dim) / total);
  return c;
}

double collapsed_probability(const CollapsedModel& model,
                             const Eigen::VectorXcd& c, Criterion criterion) {
  double p = 0.0;
  for (std::size_t j = 0; j < model.dim(); ++j) {
    const auto& b = model.basis[j];
    bool hit = false;
    switch (criterion) {
      case Criterion::Incident: hit = b.head_special || b.tail_special; break;
      case Criterion::Entering: hit = b.head_special; break;
      case Criterion::Leaving: hit = b.tail_special; break;
    }
    if (hit) p += std::norm(c[j]);
  }
  return p;
}

double collapsed_incident_to_part(const CollapsedModel& model,
                                  const Eigen::VectorXcd& c, int part) {
  double p = 0.0;
  for (std::size_t j = 0; j < model.dim(); ++j) {
    const auto& b = model.basis[j];
    if ((b.head_special && b.head_part == part) ||
        (b.tail_special && b.tail_part == part))
      p += std::norm(c[j]);
  }
  return p;
}

double theta_complete(int n, int v) {
  return std::atan2(std::sqrt(double(v) * (2.0 * n - v - 2)),
                    double(n - v - 1));
}

int predicted_steps_complete(int n, int v) {
  return int(std::lround(kPi / (2.0 * theta_complete(n, v))));
}

Eigen::Vector4d closed_form_complete(int n, int v, int steps) {
  const double th = theta_complete(n, v);
  Eigen::Vector4d a;
  const double f = 1.0 / (2.0 * std::sqrt(double(n) * v));
  a[0] = f * std::sqrt(2.0 * v * (n - 1)) * std::sin((2 * steps + 1) * th / 2);
  a[1] = -f * std::sqrt(2.0 * v * (n - 1)) * std::sin((2 * steps - 1) * th / 2);
  a[2] = f * 2.0 * std::sqrt(double(v) * (n - v - 1)) * std::cos(steps * th);
  a[3] = 0.0;
  return a;
}

double theta_bipartite(int n1, int n2, int v1, int v2) {
  const double x1 = 2.0 * v1 / n1, x2 = 2.0 * v2 / n2;
  if (x1 + x2 <= 0.0)
    throw std::invalid_argument("no special vertices in either set");
  return std::sqrt(2.0 * (x1 + x2));
}

int bipartite_step_count(int n1, int n2, int v1, int v2) {
  return int(std::lround(kPi / (2.0 * theta_bipartite(n1, n2, v1, v2))));
}

Eigen::Vector3d closed_form_bipartite(int n1, int n2, int v1, int v2,
                                      int steps) {
  const double x1 = 2.0 * v1 / n1, x2 = 2.0 * v2 / n2;
  const double th = theta_bipartite(n1, n2, v1, v2);
  Eigen::Vector3d a;
  a[0] = -std::sqrt(x1 / (x1 + x2)) * std::sin(steps * th);
  a[1] = std::sqrt(x2 / (x1 + x2)) * std::sin(steps * th);
  a[2] = -std::cos(steps * th);
  return a;
}

double phase_angle_mpartite(int m, int n) {
  return std::acos(1.0 - 1.0 / (double(m) * n));
}

int predicted_steps_mpartite(int m, int n) {
  return int(std::lround((kPi / 2.0) / phase_angle_mpartite(m, n)));
}

Eigen::VectorXd closed_form_mpartite(int m, int n, int steps) {
  const double ph = phase_angle_mpartite(m, n);
  Eigen::VectorXd a(5);
  const double f = 1.0 / std::sqrt(2.0);
  a << f * std::sin(steps * ph), -f * std::sin(steps * ph), 0.0, 0.0,
      f * std::sqrt(2.0) * std::cos(steps * ph);
  return a;
}

std::string model_to_json(const CollapsedModel& model) {
  nlohmann::json j;
  switch (model.family.kind) {
    case FamilyKind::Complete: j["family"] = "complete"; break;
    case FamilyKind::Bipartite: j["family"] = "bipartite"; break;
    case FamilyKind::MPartite: j["family"] = "mpartite"; break;
    default: j["family"] = nullptr;
  }
  j["phi"] = model.phi;
  j["step_multiplicity"] = model.step_multiplicity;
  j["basis"] = nlohmann::json::array();
  for (const auto& b : model.basis)
    j["basis"].push_back({{"label", b.label}, {"d", b.dim}});
  j["matrix"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < model.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < model.matrix.cols(); ++k)
      row.push_back({model.matrix(i, k).real(), model.matrix(i, k).imag()});
    j["matrix"].push_back(row);
  }
  j["params"] = model.params;
  return j.dump();
}

}  // namespace sqw
