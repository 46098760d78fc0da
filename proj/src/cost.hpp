#pragma once

#include <vector>

#include "circuit.hpp"
#include "topology.hpp"

namespace qroute {

// alpha(n) = 1 + (2^(n-2) - 1) / (2^n + 1), the factor turning a CNOT error
// rate into its n-qubit error probability. alpha(2) = 1 and alpha(n) -> 5/4.
double alpha(int n);

// 1 - prod(1 - alpha*p_i). Requires alpha*p_i < 1 for every weight.
double path_cost(const std::vector<double>& weights, double alpha);

struct CostReport {
    double cost = 0;   // 1 - prod(1 - alpha*p_i)
    double cost1 = 0;  // sum p_i
    double cost2 = 0;  // 1 - prod(1 - p_i)
    double alpha = 1;
    int gate_count = 0;
};

// Scores a routed circuit against the topology. Every gate must lie on an
// edge; the gate's p_i is that edge's weight. `width` is the circuit width
// used in alpha, fixed for a whole synthesis run.
CostReport cost(const CnotCircuit& c, const Topology& g, int width);

} // namespace qroute
