#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "synthesis.hpp"
#include "topology.hpp"

namespace qroute {

// m uniform CNOTs with control != target, fully determined by the seed.
CnotCircuit gen_random_circuit(int n, int m, uint64_t seed);

// m gates drawn from the directed edges of g, never repeating the previous
// directed edge. Every gate is already routable.
CnotCircuit gen_topology_circuit(const Topology& g, int m, uint64_t seed);

double rmse(const std::vector<double>& xs, const std::vector<double>& ys);
double max_distance(const std::vector<double>& xs, const std::vector<double>& ys);

struct BenchConfig {
    std::string backend;              // builtin name or path
    std::vector<int> widths;
    std::vector<int> counts;          // original CNOT counts
    int trials = 100;
    uint64_t seed = 0;
    std::vector<Algorithm> algorithms = {Algorithm::rowcol, Algorithm::permrowcol,
                                         Algorithm::napermrowcol};
    int oracle_cap = 7;               // widths above this skip the Prob column
    std::optional<double> alpha_override;
    bool topology_method = false;     // draw gates from directed edges instead
};

BenchConfig parse_bench_config(const std::string& json_text);

struct BenchRecord {
    int width = 0;
    int orig_count = 0;
    int trial = 0;
    Algorithm algo = Algorithm::rowcol;
    uint64_t seed = 0;
    int synth_count = 0;
    double cost = 0;
    double cost1 = 0;
    double cost2 = 0;
    std::optional<double> prob;
    std::optional<int64_t> runtime_us;
};

// The lexicographically first connected vertex subset of size n, the region
// logical qubits map onto in ascending order.
std::vector<int> first_connected_subset(const Topology& g, int n);

// Runs every (width, count, trial, algorithm) cell. Trials are independent
// work items; with jobs > 1 they run on a small pool and the records are
// sorted afterwards so output order never depends on scheduling.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg, int jobs = 1,
                                       bool with_timing = false);

std::string records_to_csv(const std::vector<BenchRecord>& records);

struct FitBin {
    int width = 0;
    int synth_count = 0;
    int n_samples = 0;
    double mean_prob = 0;
    double mean_cost = 0;
    double mean_cost1 = 0;
    double mean_cost2 = 0;
    double maxdist_cost = 0;
    double maxdist_cost1 = 0;
    double maxdist_cost2 = 0;
};

struct FitSummary {
    std::vector<FitBin> bins; // sorted by (width, synth_count); bins with < 3 samples dropped
    // Pooled per-width RMSE of each cost function against Prob.
    struct WidthRmse {
        int width;
        double rmse_cost;
        double rmse_cost1;
        double rmse_cost2;
    };
    std::vector<WidthRmse> per_width;
};

// Groups oracle-capable records by (width, synthesized count) and compares
// the cost functions against Prob.
FitSummary cost_fit_study(const std::vector<BenchRecord>& records);

std::string fit_summary_to_csv(const FitSummary& summary);

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

} // namespace qroute
