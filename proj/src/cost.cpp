#include "cost.hpp"

#include <cmath>

#include "error.hpp"

namespace qroute {

double alpha(int n) {
    if (n < 2) {
        throw Error(ErrorCode::invalid_argument, "alpha requires width >= 2");
    }
    // Evaluated as a ratio so the value is exact for all n up to 64.
    double numer = std::ldexp(1.0, n - 2) - 1.0;
    double denom = std::ldexp(1.0, n) + 1.0;
    return 1.0 + numer / denom;
}

double path_cost(const std::vector<double>& weights, double alpha) {
    for (double p : weights) {
        if (alpha * p >= 1.0) {
            throw Error(ErrorCode::invalid_argument, "alpha*p must stay below 1");
        }
    }
    if (weights.size() > 64) {
        // Long products go through log space to dodge underflow.
        double log_prod = 0;
        for (double p : weights) {
            log_prod += std::log1p(-alpha * p);
        }
        return 1.0 - std::exp(log_prod);
    }
    double prod = 1.0;
    for (double p : weights) {
        prod *= 1.0 - alpha * p;
    }
    return 1.0 - prod;
}

CostReport cost(const CnotCircuit& c, const Topology& g, int width) {
    CostReport report;
    report.alpha = alpha(width);
    report.gate_count = c.size();
    std::vector<double> ps;
    ps.reserve(c.gates.size());
    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate& gate = c.gates[i];
        if (!g.has_edge(gate.control, gate.target)) {
            throw Error(ErrorCode::not_allowed,
                        "gate " + std::to_string(i) + " acts on non-adjacent qubits (" +
                            std::to_string(gate.control) + ", " + std::to_string(gate.target) + ")");
        }
        ps.push_back(g.weight(gate.control, gate.target));
    }
    report.cost = path_cost(ps, report.alpha);
    report.cost2 = path_cost(ps, 1.0);
    for (double p : ps) {
        report.cost1 += p;
    }
    return report;
}

} // namespace qroute
