#include "fidelity.hpp"

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "error.hpp"

namespace qroute {

PauliLabel propagate_pauli(PauliLabel q, const Gate& gate) {
    uint64_t cbit = 1ULL << gate.control;
    uint64_t tbit = 1ULL << gate.target;
    if (q.x & cbit) {
        q.x ^= tbit;
    }
    if (q.z & tbit) {
        q.z ^= cbit;
    }
    return q;
}

namespace {

std::vector<GateChannel> gate_channels(const CnotCircuit& c, const Topology& g) {
    std::vector<GateChannel> channels;
    channels.reserve(c.gates.size());
    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate& gate = c.gates[i];
        if (!g.has_edge(gate.control, gate.target)) {
            throw Error(ErrorCode::not_allowed, "gate " + std::to_string(i) + " not on an edge");
        }
        double p = g.weight(gate.control, gate.target);
        if (p > 0.8) {
            throw Error(ErrorCode::invalid_argument, "error rate above 4/5 breaks the channel");
        }
        channels.push_back({gate.control, gate.target, p});
    }
    return channels;
}

} // namespace

FidelityResult avg_gate_fidelity(const CnotCircuit& c, const Topology& g, int width,
                                 int max_width) {
    if (max_width > hard_oracle_cap) {
        max_width = hard_oracle_cap;
    }
    if (width < 1 || width > max_width) {
        throw Error(ErrorCode::unsupported,
                    "width " + std::to_string(width) + " above the oracle cap " +
                        std::to_string(max_width));
    }
    for (const Gate& gate : c.gates) {
        if (gate.control >= width || gate.target >= width) {
            throw Error(ErrorCode::invalid_argument, "gate outside the declared width");
        }
    }
    std::vector<GateChannel> channels = gate_channels(c, g);
    size_t m = channels.size();
    std::vector<double> lambdas(m);
    for (size_t k = 0; k < m; k++) {
        lambdas[k] = channels[k].eigenvalue(false);
    }

    // Tr[S] = sum over labels of the product of per-gate eigenvalues, each
    // evaluated on the label conjugated back through the suffix of ideal
    // gates. Walking gates last-to-first keeps the label current. The sum is
    // compensated so the result holds up at width 10 and beyond.
    uint64_t count = 1ULL << (2 * width);
    double trace = 0;
    double carry = 0;
    for (uint64_t idx = 0; idx < count; idx++) {
        PauliLabel label;
        label.x = idx & ((1ULL << width) - 1);
        label.z = idx >> width;
        double prod = 1.0;
        for (size_t k = m; k-- > 0;) {
            label = propagate_pauli(label, c.gates[k]);
            if (!label.identity_on(channels[k].u, channels[k].v)) {
                prod *= lambdas[k];
            }
        }
        double y = prod - carry;
        double t = trace + y;
        carry = (t - trace) - y;
        trace = t;
    }

    FidelityResult res;
    res.t = std::ldexp(1.0, width);
    res.trace_s = trace;
    res.f_avg = trace / (res.t * (res.t + 1.0)) + 1.0 / (res.t + 1.0);
    res.prob = 1.0 - res.f_avg;
    return res;
}

namespace {

using Mat = Eigen::MatrixXcd;

Mat pauli1(int k) {
    Mat m(2, 2);
    const std::complex<double> i(0, 1);
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// The operator acting with `op` on qubits (q0, q1) and identity elsewhere.
// Qubit 0 is the least significant bit of the computational basis index.
Mat embed_two_qubit(const Mat& op, int q0, int q1, int n) {
    int t = 1 << n;
    Mat out = Mat::Zero(t, t);
    for (int col = 0; col < t; col++) {
        int c0 = (col >> q0) & 1;
        int c1 = (col >> q1) & 1;
        int rest = col & ~((1 << q0) | (1 << q1));
        for (int r0 = 0; r0 < 2; r0++) {
            for (int r1 = 0; r1 < 2; r1++) {
                std::complex<double> v = op(r1 * 2 + r0, c1 * 2 + c0);
                if (v != 0.0) {
                    int row = rest | (r0 << q0) | (r1 << q1);
                    out(row, col) += v;
                }
            }
        }
    }
    return out;
}

Mat cnot_two_qubit() {
    // Control is the low-order qubit of the 2-qubit block.
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = 1;
    m(2, 2) = 1;
    m(1, 3) = 1;
    m(3, 1) = 1;
    return m;
}

Mat superoperator_of_unitary(const Mat& u) {
    return Eigen::kroneckerProduct(u.conjugate(), u);
}

Mat superoperator_of_channel(const GateChannel& ch, int n) {
    int t = 1 << n;
    double p0 = ch.identity_weight();
    if (p0 < 0) {
        throw Error(ErrorCode::invalid_argument, "error rate above 4/5 breaks the channel");
    }
    double pk = (1.0 - p0) / 15.0;
    Mat s = p0 * Mat::Identity(t * t, t * t);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            if (a == 0 && b == 0) {
                continue;
            }
            Mat e2 = Eigen::kroneckerProduct(pauli1(b), pauli1(a)); // qubit u low, v high
            Mat e = embed_two_qubit(e2, ch.u, ch.v, n);
            s += pk * superoperator_of_unitary(e);
        }
    }
    return s;
}

} // namespace

FidelityResult dense_superoperator_favg(const CnotCircuit& c, const Topology& g, int width) {
    if (width < 1 || width > 3) {
        throw Error(ErrorCode::unsupported, "dense oracle only supports width <= 3");
    }
    for (const Gate& gate : c.gates) {
        if (gate.control >= width || gate.target >= width) {
            throw Error(ErrorCode::invalid_argument, "gate outside the declared width");
        }
    }
    std::vector<GateChannel> channels = gate_channels(c, g);
    int t = 1 << width;
    Mat total = Mat::Identity(t * t, t * t);
    Mat ideal = Mat::Identity(t, t);
    for (size_t k = 0; k < channels.size(); k++) {
        const Gate& gate = c.gates[k];
        Mat u = embed_two_qubit(cnot_two_qubit(), gate.control, gate.target, width);
        // Noise acts before its gate.
        total = superoperator_of_unitary(u) * superoperator_of_channel(channels[k], width) * total;
        ideal = u * ideal;
    }
    Mat residual = superoperator_of_unitary(ideal).adjoint() * total;

    FidelityResult res;
    res.t = static_cast<double>(t);
    res.trace_s = residual.trace().real();
    res.f_avg = res.trace_s / (res.t * (res.t + 1.0)) + 1.0 / (res.t + 1.0);
    res.prob = 1.0 - res.f_avg;
    return res;
}

} // namespace qroute
