// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the C
// API in sqw.h, the same surface other language bindings would use.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sqw.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GraphDeleter {
  void operator()(sqw_graph* g) const { sqw_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sqw_graph, GraphDeleter>;

[[noreturn]] void die(const std::string& msg, int code = 1) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

void check(int rc) {
  if (rc != SQW_OK) die(sqw_last_error());
}

// Accepts plain floats plus "pi", "2pi", "pi/2", "3pi/2", ...
double parse_phi(const std::string& text) {
  auto pos = text.find("pi");
  if (pos == std::string::npos) return std::stod(text);
  double mult = 1.0;
  if (pos > 0) mult = std::stod(text.substr(0, pos));
  double div = 1.0;
  auto rest = text.substr(pos + 2);
  if (!rest.empty()) {
    if (rest[0] != '/') die("cannot parse phase: " + text);
    div = std::stod(rest.substr(1));
  }
  return mult * kPi / div;
}

struct FamilyArgs {
  std::string family = "complete";
  std::string graph_file;
  int n = 0, n1 = 0, n2 = 0, m_sets = 0;
  int v = 1, v1 = 0, v2 = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "graph family: complete | bipartite | mpartite");
    cmd->add_option("--graph-file", graph_file, "load graph from a JSON file");
    cmd->add_option("--n", n, "vertex count (complete) / per-set (mpartite)");
    cmd->add_option("--n1", n1, "bipartite set 1 size");
    cmd->add_option("--n2", n2, "bipartite set 2 size");
    cmd->add_option("--m-sets", m_sets, "number of sets (mpartite)");
    cmd->add_option("--v", v, "number of special vertices");
    cmd->add_option("--v1", v1, "specials in bipartite set 1");
    cmd->add_option("--v2", v2, "specials in bipartite set 2");
  }

  GraphPtr build() const {
    sqw_graph* g = nullptr;
    if (!graph_file.empty()) {
      std::ifstream in(graph_file);
      if (!in) die("cannot open " + graph_file);
      std::stringstream ss;
      ss << in.rdbuf();
      check(sqw_graph_from_json(ss.str().c_str(), &g));
    } else if (family == "complete") {
      check(sqw_graph_complete(n, v, &g));
    } else if (family == "bipartite") {
      check(sqw_graph_bipartite(n1, n2, v1, v2, &g));
    } else if (family == "mpartite") {
      check(sqw_graph_mpartite(m_sets, n, &g));
    } else {
      die("unknown family: " + family);
    }
    return GraphPtr(g);
  }
};

int parse_start(const std::string& s) {
  if (s == "uniform") return SQW_START_UNIFORM;
  if (s == "entering1") return SQW_START_ENTERING_SET1;
  if (s == "entering2") return SQW_START_ENTERING_SET2;
  die("unknown start state: " + s);
}

int cmd_simulate(const FamilyArgs& fam, const std::string& phi_text, int steps,
                 const std::string& start, bool fast,
                 const std::string& cost_model, const std::string& criterion,
                 const std::string& out_format) {
  auto g = fam.build();
  const double phi = parse_phi(phi_text);
  std::vector<double> pi(steps + 1), pe(steps + 1), pl(steps + 1);
  check(sqw_trace(g.get(), phi, parse_start(start), steps, fast ? 1 : 0,
                  pi.data(), pe.data(), pl.data()));
  int m_opt = 0, m_peak = 0;
  double n_bar = 0.0, p_peak = 0.0;
  const int cost = cost_model == "walk-plus-measure"
                       ? SQW_COST_WALK_PLUS_MEASURE
                       : SQW_COST_WALK_ONLY;
  const std::vector<double>* series = &pi;
  if (criterion == "entering")
    series = &pe;
  else if (criterion == "leaving")
    series = &pl;
  else if (criterion != "incident")
    die("unknown criterion: " + criterion);
  check(sqw_optimal_steps(series->data(), steps + 1, cost, &m_opt, &n_bar));
  check(sqw_trace_peak(series->data(), steps + 1, &m_peak, &p_peak));
  if (out_format == "json") {
    nlohmann::json j;
    j["phi"] = phi;
    j["steps"] = steps;
    j["m_opt"] = m_opt;
    j["n_bar"] = n_bar;
    j["m_peak"] = m_peak;
    j["p_peak"] = p_peak;
    j["p_incident"] = pi;
    j["p_entering"] = pe;
    j["p_leaving"] = pl;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("step,p_incident,p_entering,p_leaving\n");
    for (int m = 0; m <= steps; ++m)
      std::printf("%d,%.12g,%.12g,%.12g\n", m, pi[m], pe[m], pl[m]);
  }
  return 0;
}

int cmd_sweep(int n, int v, int phi_points, int steps,
              const std::string& out_format) {
  if (steps < 0) {
    double theta = 0.0;
    check(sqw_theta_complete(n, v, &theta));
    steps = 4 * int(std::ceil(kPi / (2.0 * theta)));
  }
  std::vector<double> phis(phi_points);
  for (int i = 0; i < phi_points; ++i) phis[i] = 2.0 * kPi * i / phi_points;
  std::vector<double> out(std::size_t(phi_points) * (steps + 1) * 3);
  check(sqw_sweep(n, v, phis.data(), phi_points, steps, out.data()));
  if (out_format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["v"] = v;
    j["steps"] = steps;
    j["points"] = nlohmann::json::array();
    for (int i = 0; i < phi_points; ++i)
      for (int m = 0; m <= steps; ++m) {
        const std::size_t base = (std::size_t(i) * (steps + 1) + m) * 3;
        j["points"].push_back({{"phi", phis[i]},
                               {"m", m},
                               {"p_incident", out[base]},
                               {"p_entering", out[base + 1]},
                               {"p_leaving", out[base + 2]}});
      }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("phi,m,p_incident,p_entering,p_leaving\n");
  for (int i = 0; i < phi_points; ++i)
    for (int m = 0; m <= steps; ++m) {
      const std::size_t base = (std::size_t(i) * (steps + 1) + m) * 3;
      std::printf("%.12g,%d,%.12g,%.12g,%.12g\n", phis[i], m, out[base],
                  out[base + 1], out[base + 2]);
    }
  return 0;
}

int cmd_compare_classical(int n, int v, long long trials,
                          unsigned long long seed) {
  std::printf("variant,N,v,closed_form_avg,mc_avg,mc_stderr,seed\n");
  for (int variant : {SQW_CLASSICAL_BLIND, SQW_CLASSICAL_MEMORY}) {
    double avg = 0.0, mean = 0.0, se = 0.0;
    check(sqw_classical_average(variant, n, v, &avg));
    check(sqw_classical_monte_carlo(variant, n, v, trials, seed, &mean, &se));
    std::printf("%s,%d,%d,%.12g,%.12g,%.12g,%llu\n",
                variant == SQW_CLASSICAL_BLIND ? "blind" : "memory", n, v, avg,
                mean, se, seed);
  }
  return 0;
}

int cmd_verify_collapse(const FamilyArgs& fam, const std::string& phi_text,
                        int steps) {
  auto g = fam.build();
  double dev = 0.0;
  int rc = sqw_verify_collapse(g.get(), parse_phi(phi_text), steps, &dev);
  if (rc != SQW_OK && rc != SQW_ERR_VERIFY) die(sqw_last_error());
  std::printf("collapse equivalence over %d steps: max_abs_dev=%.3e -> %s\n",
              steps, dev, rc == SQW_OK ? "pass" : "FAIL");
  return rc == SQW_OK ? 0 : 2;
}

int cmd_verify_circuit(const FamilyArgs& fam, const std::string& phi_text,
                       int steps, const std::string& out_format) {
  auto g = fam.build();
  double dev = 0.0;
  long long calls = 0;
  int rc =
      sqw_verify_circuit(g.get(), parse_phi(phi_text), steps, &dev, &calls);
  if (rc != SQW_OK && rc != SQW_ERR_VERIFY) die(sqw_last_error());
  if (out_format == "json") {
    nlohmann::json j;
    j["family"] = fam.family;
    j["params"] = {{"n", fam.n},       {"n1", fam.n1}, {"n2", fam.n2},
                   {"m_sets", fam.m_sets}, {"v", fam.v},   {"v1", fam.v1},
                   {"v2", fam.v2}};
    j["steps"] = steps;
    j["max_abs_dev"] = dev;
    j["oracle_calls"] = calls;
    j["pass"] = rc == SQW_OK;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf(
        "circuit vs walk over %d steps: max_abs_dev=%.3e oracle_calls=%lld "
        "-> %s\n",
        steps, dev, calls, rc == SQW_OK ? "pass" : "FAIL");
  }
  return rc == SQW_OK ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering-quantum-walk search simulator"};
  app.require_subcommand(1);

  FamilyArgs fam;
  std::string phi = "pi";
  std::string start = "uniform";
  std::string cost_model = "walk-only";
  std::string criterion = "incident";
  std::string out_format = "csv";
  int steps = -1;
  bool fast = false;

  auto* sim = app.add_subcommand("simulate", "probability trace of one walk");
  fam.add_to(sim);
  sim->add_option("--phi", phi, "special-vertex phase (accepts e.g. pi, pi/2)");
  sim->add_option("--steps", steps, "number of walk steps")->required();
  sim->add_option("--start", start, "uniform | entering1 | entering2");
  sim->add_option("--criterion", criterion, "incident | entering | leaving");
  sim->add_option("--cost-model", cost_model, "walk-only | walk-plus-measure");
  sim->add_flag("--fast", fast, "use the collapsed invariant-subspace model");
  sim->add_option("--out", out_format, "csv | json");

  int sweep_n = 256, sweep_v = 1, phi_points = 128;
  auto* sweep = app.add_subcommand("sweep", "phase sweep on a complete graph");
  sweep->add_option("--n", sweep_n, "vertex count");
  sweep->add_option("--v", sweep_v, "special vertex count");
  sweep->add_option("--phi-points", phi_points, "phase grid points");
  sweep->add_option("--steps", steps, "steps per phase (default 4*ceil(pi/2theta))");
  sweep->add_option("--out", out_format, "csv | json");

  int cls_n = 256, cls_v = 1;
  long long trials = 100000;
  unsigned long long seed = 1;
  auto* cls = app.add_subcommand("compare-classical",
                                 "classical baselines: closed form vs Monte Carlo");
  cls->add_option("--n", cls_n, "element count");
  cls->add_option("--v", cls_v, "special count");
  cls->add_option("--trials", trials, "Monte Carlo trials");
  cls->add_option("--seed", seed, "RNG seed");

  auto* vc = app.add_subcommand("verify-collapse",
                                "full-space vs collapsed-model evolution");
  fam.add_to(vc);
  vc->add_option("--phi", phi, "special-vertex phase");
  vc->add_option("--steps", steps, "steps to verify")->required();

  auto* vq = app.add_subcommand("verify-circuit",
                                "oracle-circuit steps vs walk steps");
  fam.add_to(vq);
  vq->add_option("--phi", phi, "special-vertex phase");
  vq->add_option("--steps", steps, "steps to verify")->required();
  vq->add_option("--out", out_format, "csv | json");

  CLI11_PARSE(app, argc, argv);

  if (sim->parsed())
    return cmd_simulate(fam, phi, steps, start, fast, cost_model, criterion,
                        out_format);
  if (sweep->parsed())
    return cmd_sweep(sweep_n, sweep_v, phi_points, steps, out_format);
  if (cls->parsed()) return cmd_compare_classical(cls_n, cls_v, trials, seed);
  if (vc->parsed()) return cmd_verify_collapse(fam, phi, steps);
  if (vq->parsed()) return cmd_verify_circuit(fam, phi, steps, out_format);
  return 1;
}
