#pragma once

#include <string>
#include <vector>

namespace qroute {

struct Gate {
    int control;
    int target;

    bool operator==(const Gate&) const = default;
};

// A CNOT-only circuit over `num_qubits` wires, gates in program order.
struct CnotCircuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    bool operator==(const CnotCircuit&) const = default;

    void add(int control, int target);
    int size() const { return static_cast<int>(gates.size()); }
};

// Injective assignment of logical wire i to register phi[i].
struct QubitMap {
    std::vector<int> phi;

    explicit QubitMap(std::vector<int> phi_);
    static QubitMap identity(int n);
    int operator()(int i) const { return phi.at(static_cast<size_t>(i)); }
    int size() const { return static_cast<int>(phi.size()); }
};

enum class CircuitFormat {
    simple,    // "qubits N" header then "cx A B" lines
    qasm_lite, // OPENQASM 2.0 subset: version header, one qreg, cx only
};

CnotCircuit parse_circuit(const std::string& text, CircuitFormat format);
std::string emit_circuit(const CnotCircuit& c, CircuitFormat format);

CnotCircuit compose(const CnotCircuit& a, const CnotCircuit& b);

// Relabels every gate (i, j) to (phi(i), phi(j)). The result is wide enough
// to hold the largest register in the image.
CnotCircuit apply_map(const CnotCircuit& c, const QubitMap& m);

} // namespace qroute
