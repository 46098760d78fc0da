#pragma once

#include <cstdint>

#include "circuit.hpp"
#include "topology.hpp"

namespace qroute {

// n-qubit Pauli string up to phase, as a symplectic bit pair: bit q of `x`
// (`z`) set iff the string has an X (Z) component on qubit q.
struct PauliLabel {
    uint64_t x = 0;
    uint64_t z = 0;

    bool operator==(const PauliLabel&) const = default;
    bool is_identity() const { return x == 0 && z == 0; }
    bool identity_on(int q0, int q1) const {
        uint64_t mask = (1ULL << q0) | (1ULL << q1);
        return ((x | z) & mask) == 0;
    }
};

// Conjugation by CNOT(c, t): X_c -> X_c X_t and Z_t -> Z_t Z_c, phases
// dropped. CNOT is self-inverse, so the map is the same in both directions.
PauliLabel propagate_pauli(PauliLabel q, const Gate& gate);

// Uniform generalized Pauli channel of one noisy CNOT: identity Kraus weight
// p0 = 1 - (5/4)p and the remaining weight split evenly over the 15
// non-identity two-qubit Paulis. Calibrated so a lone gate's average fidelity
// is exactly 1 - p.
struct GateChannel {
    int u = 0;
    int v = 0;
    double p = 0;

    double identity_weight() const { return 1.0 - 1.25 * p; }

    // Transfer-matrix eigenvalue on a two-qubit Pauli restricted to the pair:
    // 1 on the identity, (16*p0 - 1)/15 otherwise (7 of the 15 non-identity
    // Paulis commute with any fixed non-identity Pauli).
    double eigenvalue(bool identity_restriction) const {
        if (identity_restriction) {
            return 1.0;
        }
        return (16.0 * identity_weight() - 1.0) / 15.0;
    }
};

struct FidelityResult {
    double f_avg = 1;
    double prob = 0;
    double trace_s = 0; // Tr[S] of the residual error channel
    double t = 1;       // 2^n
};

inline constexpr int default_oracle_cap = 13;
inline constexpr int hard_oracle_cap = 16;

// Exact average gate fidelity of a noisy CNOT circuit: each gate carries the
// uniform Pauli channel for its edge weight, errors are conjugated to the
// circuit end, and Tr[S] is summed over all 4^n Pauli labels. Idle qubits are
// noiseless. O(4^n * m); width capped by `max_width`.
FidelityResult avg_gate_fidelity(const CnotCircuit& c, const Topology& g, int width,
                                 int max_width = default_oracle_cap);

// Brute-force oracle: explicit 4^n x 4^n superoperator product composed with
// the inverse ideal unitary. Only for width <= 3.
FidelityResult dense_superoperator_favg(const CnotCircuit& c, const Topology& g, int width);

} // namespace qroute
