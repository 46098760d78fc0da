/* qroute: noise-aware CNOT circuit routing.
 *
 * C interface to the routing core. Objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a status
 * code and reports details through qr_last_error(). Handles are not
 * synchronized; share them across threads only for concurrent reads.
 */

#ifndef QROUTE_H
#define QROUTE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qr_topology qr_topology;
typedef struct qr_circuit qr_circuit;
typedef struct qr_synthesis qr_synthesis;

enum qr_status {
    QR_OK = 0,
    QR_ERR_INVALID_ARGUMENT = 1,
    QR_ERR_PARSE = 2,
    QR_ERR_IO = 3,
    QR_ERR_DISCONNECTED = 4,
    QR_ERR_NOT_ALLOWED = 5,
    QR_ERR_UNSUPPORTED = 6,
    QR_ERR_NO_SOLUTION = 7,
    QR_ERR_INTERNAL = 8
};

enum qr_format {
    QR_FORMAT_SIMPLE = 0,  /* "qubits N" header, "cx A B" lines */
    QR_FORMAT_QASM_LITE = 1 /* OPENQASM 2.0 subset, cx only */
};

enum qr_algorithm {
    QR_ALGO_ROWCOL = 0,
    QR_ALGO_PERMROWCOL = 1,
    QR_ALGO_NAPERMROWCOL = 2
};

/* Message for the most recent failure on this thread. */
const char* qr_last_error(void);

/* Frees strings returned through char** out parameters. */
void qr_string_free(char* s);

/* ---- topologies ---- */

int qr_topology_from_json(const char* json_text, qr_topology** out);
/* Accepts a bundled backend name (nairobi, guadalupe, cairo) or a file path. */
int qr_topology_load(const char* name_or_path, qr_topology** out);
int qr_topology_induced(const qr_topology* t, const int* labels, int n, qr_topology** out);
int qr_topology_num_vertices(const qr_topology* t);
int qr_topology_num_edges(const qr_topology* t);
int qr_topology_vertex(const qr_topology* t, int index, int* label);
int qr_topology_edge(const qr_topology* t, int index, int* u, int* v, double* weight);
void qr_topology_free(qr_topology* t);

/* ---- circuits ---- */

int qr_circuit_new(int num_qubits, qr_circuit** out);
int qr_circuit_add_gate(qr_circuit* c, int control, int target);
int qr_circuit_parse(const char* text, int format, qr_circuit** out);
int qr_circuit_emit(const qr_circuit* c, int format, char** out);
int qr_circuit_width(const qr_circuit* c);
int qr_circuit_num_gates(const qr_circuit* c);
int qr_circuit_gate(const qr_circuit* c, int index, int* control, int* target);
/* Relabels wire i to phi[i]; phi must be injective with phi_len >= width. */
int qr_circuit_apply_map(const qr_circuit* c, const int* phi, int phi_len, qr_circuit** out);
void qr_circuit_free(qr_circuit* c);

/* Deterministic generators: same seed, same circuit. */
int qr_gen_random_circuit(int n, int m, uint64_t seed, qr_circuit** out);
int qr_gen_topology_circuit(const qr_topology* t, int m, uint64_t seed, qr_circuit** out);

/* ---- scoring ---- */

typedef struct {
    double cost;   /* 1 - prod(1 - alpha p_i) */
    double cost1;  /* sum p_i */
    double cost2;  /* 1 - prod(1 - p_i) */
    double alpha;
    int gate_count;
} qr_cost_report;

/* Scores a routed circuit; every gate must sit on an edge of t. `width` is
 * the circuit width entering the alpha factor. */
int qr_cost(const qr_circuit* c, const qr_topology* t, int width, qr_cost_report* out);

typedef struct {
    double f_avg;
    double prob;    /* 1 - f_avg */
    double trace_s; /* Tr[S] of the residual error channel */
} qr_fidelity_report;

/* Exact average gate fidelity under the per-gate Pauli noise model. Widths
 * above max_width (capped at 16) are rejected; pass 0 for the default cap. */
int qr_avg_gate_fidelity(const qr_circuit* c, const qr_topology* t, int width, int max_width,
                         qr_fidelity_report* out);

/* ---- synthesis ---- */

/* Routes the logical circuit onto t. `phi` (length = circuit width, or NULL
 * for the ascending default) maps logical wire i to vertex phi[i]; the image
 * must be exactly the vertex set of t. Pass alpha_override < 0 to use
 * alpha(width). */
int qr_synthesize(const qr_topology* t, const qr_circuit* logical, const int* phi, int phi_len,
                  int algorithm, double alpha_override, qr_synthesis** out);
int qr_synthesis_circuit(const qr_synthesis* s, qr_circuit** out);
int qr_synthesis_num_qubits(const qr_synthesis* s);
/* Output permutation as parallel arrays: the parity for output column cols[i]
 * ends on register rows[i]. Arrays must hold qr_synthesis_num_pairs entries. */
int qr_synthesis_num_pairs(const qr_synthesis* s);
int qr_synthesis_permutation(const qr_synthesis* s, int* rows, int* cols);
/* 1 if the recorded operations provably map the input matrix to the returned
 * permutation, 0 otherwise. */
int qr_synthesis_verified(const qr_synthesis* s);
void qr_synthesis_free(qr_synthesis* s);

/* ---- benchmark harness ---- */

/* Runs the seeded benchmark described by the JSON config and returns the
 * records CSV plus the fit-study summary CSV. Deterministic for a given
 * config, independent of `jobs`. Timing is only recorded when with_timing is
 * nonzero so that default outputs are byte-reproducible. */
int qr_run_benchmark(const char* config_json, int jobs, int with_timing, char** records_csv,
                     char** summary_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QROUTE_H */
