/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C API for the scattering-quantum-walk search library.
 *
 * All functions return SQW_OK (0) on success or a negative error code;
 * sqw_last_error() describes the most recent failure on the calling thread.
 * Handles are opaque and must be released with the matching _free call.
 */
#ifndef SQW_H
#define SQW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SQW_OK 0
#define SQW_ERR_INVALID (-1)  /* invalid parameter */
#define SQW_ERR_DOMAIN (-2)   /* operation outside its stated domain */
#define SQW_ERR_TOO_LARGE (-3)
#define SQW_ERR_VERIFY (-4)   /* verification found a deviation */
#define SQW_ERR_INTERNAL (-5)

typedef struct sqw_graph sqw_graph;

/* Criteria for success probabilities. */
#define SQW_CRITERION_INCIDENT 0
#define SQW_CRITERION_ENTERING 1
#define SQW_CRITERION_LEAVING 2

/* Cost models for the optimal measurement step. */
#define SQW_COST_WALK_ONLY 0
#define SQW_COST_WALK_PLUS_MEASURE 1

/* Initial states. */
#define SQW_START_UNIFORM 0
#define SQW_START_ENTERING_SET1 1
#define SQW_START_ENTERING_SET2 2

/* Classical search variants. */
#define SQW_CLASSICAL_BLIND 0
#define SQW_CLASSICAL_MEMORY 1

const char* sqw_last_error(void);

/* ---- graphs ---- */
int sqw_graph_complete(int n, int v, sqw_graph** out);
int sqw_graph_bipartite(int n1, int n2, int v1, int v2, sqw_graph** out);
int sqw_graph_mpartite(int m, int n, sqw_graph** out);
int sqw_graph_from_json(const char* json_text, sqw_graph** out);
void sqw_graph_free(sqw_graph* g);

int sqw_graph_num_vertices(const sqw_graph* g);
int sqw_graph_num_edges(const sqw_graph* g);       /* undirected */
int sqw_graph_num_edge_states(const sqw_graph* g); /* directed */
/* Serializes to JSON; free the returned string with sqw_string_free. */
int sqw_graph_to_json(const sqw_graph* g, char** out);
void sqw_string_free(char* s);

/* ---- walk traces ----
 * Fills three arrays of length m_max+1 with P(m) for m = 0..m_max under the
 * incident / entering / leaving criteria. start is one of SQW_START_*.
 * With fast nonzero the collapsed invariant-subspace model is used (the
 * graph must carry a family tag); otherwise the full edge space is evolved.
 */
int sqw_trace(const sqw_graph* g, double phi, int start, int m_max, int fast,
              double* p_incident, double* p_entering, double* p_leaving);

/* Probability weight incident to special vertices of one bipartite set
 * (1 or 2) after m steps. */
int sqw_incident_split(const sqw_graph* g, double phi, int start, int m,
                       double* p_set1, double* p_set2);

/* Phase sweep on the complete graph: for each of the n_phi phases fills
 * (m_max+1) rows of three probabilities, flattened phase-major:
 * out[((i*(m_max+1))+m)*3 + c] with c = incident, entering, leaving. */
int sqw_sweep(int n, int v, const double* phis, int n_phi, int m_max,
              double* out);

int sqw_optimal_steps(const double* trace, int len, int cost_model,
                      int* m_opt, double* n_bar);
int sqw_trace_peak(const double* trace, int len, int* m_peak, double* p_peak);

/* ---- closed-form predictors (phi = pi) ---- */
int sqw_theta_complete(int n, int v, double* theta);
int sqw_predicted_steps_complete(int n, int v, int* steps);
/* Counts two-step-operator applications; the walk peak sits near twice
 * this many walk steps. */
int sqw_predicted_steps_bipartite(int n1, int n2, int v1, int v2, int* steps);
int sqw_predicted_steps_mpartite(int m, int n, int* steps);

/* ---- classical baselines ---- */
int sqw_classical_average(int variant, int n, int v, double* average);
int sqw_classical_monte_carlo(int variant, int n, int v, int64_t trials,
                              uint64_t seed, double* mean, double* stderr_out);

/* ---- verification ----
 * Return SQW_OK when the check passes, SQW_ERR_VERIFY when it runs but the
 * deviation exceeds the library tolerance; max_abs_dev is filled either way.
 */
int sqw_verify_collapse(const sqw_graph* g, double phi, int steps,
                        double* max_abs_dev);
int sqw_verify_circuit(const sqw_graph* g, double phi, int steps,
                       double* max_abs_dev, long long* oracle_calls);

/* Collapsed model description as JSON (basis labels, d_j, matrix, params). */
int sqw_model_json(const sqw_graph* g, double phi, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SQW_H */
