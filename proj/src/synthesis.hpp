#pragma once

#include <optional>
#include <vector>

#include "circuit.hpp"
#include "parity_matrix.hpp"
#include "topology.hpp"

namespace qroute {

enum class Algorithm {
    rowcol,        // reduces to the identity, noise- and permutation-agnostic
    permrowcol,    // reduces to a permutation, connectivity-aware
    napermrowcol,  // permrowcol with noise-aware pivots and traversals
};

enum class ReduceMode {
    perm,        // tree traversals over hop-count Steiner trees
    noise_aware, // cheapest-path first passes over weighted Steiner trees
};

// One reduction step: pivot pair, the row operations of both passes, and the
// vertex retired from the topology afterwards.
struct ReductionRecord {
    int pivot_row = -1;
    int pivot_col = -1;
    std::vector<RowOp> column_ops;
    std::vector<RowOp> row_ops;
    int removed_vertex = -1;
};

struct SynthesisResult {
    CnotCircuit circuit;        // allowed gates in execution order
    ParityMatrix permutation;   // what's left of A after all reductions
    std::vector<RowOp> ops;     // all row operations in application order
    std::vector<ReductionRecord> per_step;
};

// Cached first-pass traversal for a candidate pivot column, reused by the
// column reduction after selection.
struct ColumnTraversal {
    SteinerTree tree;
    std::vector<RowOp> first_pass; // noise-aware only
    double first_pass_cost = 0;
};

int select_pivot_row_perm(const ParityMatrix& a, const Topology& g);
int select_pivot_col_perm(const ParityMatrix& a, int pivot_row);
int select_pivot_row_na(const ParityMatrix& a, const Topology& g);
std::pair<int, std::optional<ColumnTraversal>> select_pivot_col_na(const ParityMatrix& a,
                                                                   const Topology& g,
                                                                   int pivot_row, double alpha);

// Reduces column c to the basis vector with a single 1 at row r, applying the
// operations to `a` and returning them. The terminal set may be passed with a
// cached traversal from pivot selection.
std::vector<RowOp> reduce_column(ParityMatrix& a, const Topology& g, int r, int c,
                                 ReduceMode mode, double alpha,
                                 std::optional<ColumnTraversal> cached = std::nullopt);

// Reduces row r to the basis row with a single 1 at column c. Column c must
// already be reduced.
std::vector<RowOp> reduce_row(ParityMatrix& a, const Topology& g, int r, int c, ReduceMode mode,
                              double alpha);

SynthesisResult rowcol(const ParityMatrix& a, const Topology& g);
SynthesisResult permrowcol(const ParityMatrix& a, const Topology& g);
SynthesisResult napermrowcol(const ParityMatrix& a, const Topology& g, double alpha);

SynthesisResult synthesize(Algorithm algo, const ParityMatrix& a, const Topology& g,
                           double alpha);

// Noise-aware first pass over a built tree: for each Steiner node, the
// cheapest path from (column mode) or to (row mode) a terminal, unioned into
// one operation list. Exposed for the crossover property checks.
std::vector<RowOp> first_pass_ops(const SteinerTree& tree, const Topology& g, double alpha,
                                  bool row_mode, double* cost_out = nullptr);

} // namespace qroute
