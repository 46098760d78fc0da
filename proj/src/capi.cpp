#include "qroute.h"

#include <cstring>
#include <string>

#include "backends.hpp"
#include "benchgen.hpp"
#include "circuit.hpp"
#include "cost.hpp"
#include "error.hpp"
#include "fidelity.hpp"
#include "parity_matrix.hpp"
#include "synthesis.hpp"
#include "topology.hpp"

using namespace qroute;

struct qr_topology {
    Topology impl;
};

struct qr_circuit {
    CnotCircuit impl;
};

struct qr_synthesis {
    SynthesisResult impl;
    ParityMatrix input;
    int num_qubits = 0;
};

namespace {

thread_local std::string g_last_error;

int set_error(const Error& e) {
    g_last_error = e.what();
    switch (e.code) {
        case ErrorCode::invalid_argument: return QR_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse: return QR_ERR_PARSE;
        case ErrorCode::io: return QR_ERR_IO;
        case ErrorCode::disconnected: return QR_ERR_DISCONNECTED;
        case ErrorCode::not_allowed: return QR_ERR_NOT_ALLOWED;
        case ErrorCode::unsupported: return QR_ERR_UNSUPPORTED;
        case ErrorCode::no_solution: return QR_ERR_NO_SOLUTION;
        case ErrorCode::internal: return QR_ERR_INTERNAL;
    }
    return QR_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return QR_OK;
    } catch (const Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QR_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool cond, const char* msg) {
    if (!cond) {
        g_last_error = msg;
        return QR_ERR_INVALID_ARGUMENT;
    }
    return QR_OK;
}

} // namespace

extern "C" {

const char* qr_last_error(void) {
    return g_last_error.c_str();
}

void qr_string_free(char* s) {
    delete[] s;
}

int qr_topology_from_json(const char* json_text, qr_topology** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] { *out = new qr_topology{load_backend(json_text)}; });
}

int qr_topology_load(const char* name_or_path, qr_topology** out) {
    if (int rc = require(name_or_path && out, "null argument")) return rc;
    return guarded([&] { *out = new qr_topology{resolve_backend(name_or_path)}; });
}

int qr_topology_induced(const qr_topology* t, const int* labels, int n, qr_topology** out) {
    if (int rc = require(t && labels && out && n > 0, "null or empty argument")) return rc;
    return guarded([&] {
        std::vector<int> ls(labels, labels + n);
        *out = new qr_topology{induced_subgraph(t->impl, ls)};
    });
}

int qr_topology_num_vertices(const qr_topology* t) {
    return t ? static_cast<int>(t->impl.vertices.size()) : -1;
}

int qr_topology_num_edges(const qr_topology* t) {
    return t ? static_cast<int>(t->impl.edges.size()) : -1;
}

int qr_topology_vertex(const qr_topology* t, int index, int* label) {
    if (int rc = require(t && label, "null argument")) return rc;
    if (int rc = require(index >= 0 && index < static_cast<int>(t->impl.vertices.size()),
                         "vertex index out of range"))
        return rc;
    *label = t->impl.vertices[static_cast<size_t>(index)];
    return QR_OK;
}

int qr_topology_edge(const qr_topology* t, int index, int* u, int* v, double* weight) {
    if (int rc = require(t && u && v && weight, "null argument")) return rc;
    if (int rc = require(index >= 0 && index < static_cast<int>(t->impl.edges.size()),
                         "edge index out of range"))
        return rc;
    const auto& e = t->impl.edges[static_cast<size_t>(index)];
    *u = e.first.first;
    *v = e.first.second;
    *weight = e.second;
    return QR_OK;
}

void qr_topology_free(qr_topology* t) {
    delete t;
}

int qr_circuit_new(int num_qubits, qr_circuit** out) {
    if (int rc = require(out && num_qubits >= 1, "need at least one qubit")) return rc;
    return guarded([&] {
        auto* c = new qr_circuit;
        c->impl.num_qubits = num_qubits;
        *out = c;
    });
}

int qr_circuit_add_gate(qr_circuit* c, int control, int target) {
    if (int rc = require(c != nullptr, "null circuit")) return rc;
    return guarded([&] { c->impl.add(control, target); });
}

int qr_circuit_parse(const char* text, int format, qr_circuit** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guarded([&] {
        auto fmt = format == QR_FORMAT_QASM_LITE ? CircuitFormat::qasm_lite : CircuitFormat::simple;
        *out = new qr_circuit{parse_circuit(text, fmt)};
    });
}

int qr_circuit_emit(const qr_circuit* c, int format, char** out) {
    if (int rc = require(c && out, "null argument")) return rc;
    return guarded([&] {
        auto fmt = format == QR_FORMAT_QASM_LITE ? CircuitFormat::qasm_lite : CircuitFormat::simple;
        *out = dup_string(emit_circuit(c->impl, fmt));
    });
}

int qr_circuit_width(const qr_circuit* c) {
    return c ? c->impl.num_qubits : -1;
}

int qr_circuit_num_gates(const qr_circuit* c) {
    return c ? c->impl.size() : -1;
}

int qr_circuit_gate(const qr_circuit* c, int index, int* control, int* target) {
    if (int rc = require(c && control && target, "null argument")) return rc;
    if (int rc = require(index >= 0 && index < c->impl.size(), "gate index out of range")) return rc;
    *control = c->impl.gates[static_cast<size_t>(index)].control;
    *target = c->impl.gates[static_cast<size_t>(index)].target;
    return QR_OK;
}

int qr_circuit_apply_map(const qr_circuit* c, const int* phi, int phi_len, qr_circuit** out) {
    if (int rc = require(c && phi && out, "null argument")) return rc;
    return guarded([&] {
        QubitMap m(std::vector<int>(phi, phi + phi_len));
        *out = new qr_circuit{apply_map(c->impl, m)};
    });
}

void qr_circuit_free(qr_circuit* c) {
    delete c;
}

int qr_gen_random_circuit(int n, int m, uint64_t seed, qr_circuit** out) {
    if (int rc = require(out && m >= 0, "null argument")) return rc;
    return guarded([&] { *out = new qr_circuit{gen_random_circuit(n, m, seed)}; });
}

int qr_gen_topology_circuit(const qr_topology* t, int m, uint64_t seed, qr_circuit** out) {
    if (int rc = require(t && out && m >= 0, "null argument")) return rc;
    return guarded([&] { *out = new qr_circuit{gen_topology_circuit(t->impl, m, seed)}; });
}

int qr_cost(const qr_circuit* c, const qr_topology* t, int width, qr_cost_report* out) {
    if (int rc = require(c && t && out, "null argument")) return rc;
    return guarded([&] {
        CostReport r = cost(c->impl, t->impl, width);
        *out = {r.cost, r.cost1, r.cost2, r.alpha, r.gate_count};
    });
}

int qr_avg_gate_fidelity(const qr_circuit* c, const qr_topology* t, int width, int max_width,
                         qr_fidelity_report* out) {
    if (int rc = require(c && t && out, "null argument")) return rc;
    return guarded([&] {
        FidelityResult r =
            avg_gate_fidelity(c->impl, t->impl, width, max_width > 0 ? max_width : default_oracle_cap);
        *out = {r.f_avg, r.prob, r.trace_s};
    });
}

int qr_synthesize(const qr_topology* t, const qr_circuit* logical, const int* phi, int phi_len,
                  int algorithm, double alpha_override, qr_synthesis** out) {
    if (int rc = require(t && logical && out, "null argument")) return rc;
    return guarded([&] {
        int n = logical->impl.num_qubits;
        if (static_cast<size_t>(n) != t->impl.vertices.size()) {
            throw Error(ErrorCode::invalid_argument,
                        "circuit width must equal the topology size");
        }
        std::vector<int> map_vec;
        if (phi) {
            if (phi_len != n) {
                throw Error(ErrorCode::invalid_argument, "map length must equal circuit width");
            }
            map_vec.assign(phi, phi + phi_len);
        } else {
            map_vec = t->impl.vertices;
        }
        QubitMap m(map_vec);
        for (int v : map_vec) {
            if (!t->impl.has_vertex(v)) {
                throw Error(ErrorCode::invalid_argument,
                            "map register " + std::to_string(v) + " not in topology");
            }
        }
        ParityMatrix a = ParityMatrix::from_circuit(logical->impl, n);
        a.relabel(m);
        double av = alpha_override >= 0 ? alpha_override : alpha(n >= 2 ? n : 2);
        Algorithm algo = algorithm == QR_ALGO_ROWCOL ? Algorithm::rowcol
                         : algorithm == QR_ALGO_PERMROWCOL ? Algorithm::permrowcol
                                                           : Algorithm::napermrowcol;
        auto* s = new qr_synthesis;
        s->input = a;
        s->impl = synthesize(algo, a, t->impl, av);
        s->num_qubits = s->impl.circuit.num_qubits;
        *out = s;
    });
}

int qr_synthesis_circuit(const qr_synthesis* s, qr_circuit** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&] { *out = new qr_circuit{s->impl.circuit}; });
}

int qr_synthesis_num_qubits(const qr_synthesis* s) {
    return s ? s->num_qubits : -1;
}

int qr_synthesis_num_pairs(const qr_synthesis* s) {
    return s ? s->impl.permutation.active_dim() : -1;
}

int qr_synthesis_permutation(const qr_synthesis* s, int* rows, int* cols) {
    if (int rc = require(s && rows && cols, "null argument")) return rc;
    return guarded([&] {
        const ParityMatrix& p = s->impl.permutation;
        int i = 0;
        for (int c : p.col_labels()) {
            for (int r : p.row_labels()) {
                if (p.get(r, c)) {
                    rows[i] = r;
                    cols[i] = c;
                    i++;
                    break;
                }
            }
        }
    });
}

int qr_synthesis_verified(const qr_synthesis* s) {
    if (!s) {
        return 0;
    }
    try {
        return verify_synthesis(s->input, s->impl.ops, s->impl.permutation) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

void qr_synthesis_free(qr_synthesis* s) {
    delete s;
}

int qr_run_benchmark(const char* config_json, int jobs, int with_timing, char** records_csv,
                     char** summary_csv) {
    if (int rc = require(config_json && records_csv && summary_csv, "null argument")) return rc;
    return guarded([&] {
        BenchConfig cfg = parse_bench_config(config_json);
        std::vector<BenchRecord> records = run_benchmark(cfg, jobs, with_timing != 0);
        *records_csv = dup_string(records_to_csv(records));
        *summary_csv = dup_string(fit_summary_to_csv(cost_fit_study(records)));
    });
}

} // extern "C"
