#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace qroute {

// Row operation R(source, target): row `target` <- row `target` XOR row
// `source`. Corresponds to the gate CNOT(target, source).
struct RowOp {
    int source;
    int target;

    bool operator==(const RowOp&) const = default;
};

// Dense bit-packed GF(2) square matrix with named rows and columns. Rows and
// columns carry register labels rather than positions; reductions remove
// labels while the packed storage stays fixed. Entry (i, j) records whether
// input register i participates in the output parity on register j.
//
// Storage is one 64-bit word per row, which covers every backend in scope.
class ParityMatrix {
public:
    static constexpr int max_dim = 64;

    static ParityMatrix identity(int n);
    static ParityMatrix from_circuit(const CnotCircuit& c, int n);

    // Builds a matrix with explicit labels and entries given row-major over
    // the current label order.
    static ParityMatrix from_entries(const std::vector<int>& row_labels,
                                     const std::vector<int>& col_labels,
                                     const std::vector<std::vector<int>>& entries);

    int active_dim() const { return static_cast<int>(row_labels_.size()); }
    const std::vector<int>& row_labels() const { return row_labels_; }
    const std::vector<int>& col_labels() const { return col_labels_; }
    bool has_row(int label) const;
    bool has_col(int label) const;

    int get(int row_label, int col_label) const;
    void apply_row_op(const RowOp& op);
    void apply_row_ops(const std::vector<RowOp>& ops);

    int row_weight(int row_label) const;
    int col_weight(int col_label) const;

    // True iff row `row_label` is zero except for a single 1 in column
    // `col_label`.
    bool row_is_basis(int row_label, int col_label) const;
    bool col_is_basis(int col_label, int row_label) const;

    // Labels of columns with a 1 in the given row, ascending.
    std::vector<int> cols_with_one(int row_label) const;
    // Labels of rows with a 1 in the given column, ascending.
    std::vector<int> rows_with_one(int col_label) const;

    int rank() const;
    bool is_permutation() const;

    // Replaces every row/column label l by map(l).
    void relabel(const QubitMap& map);

    void remove_row(int label);
    void remove_col(int label);

    // Solves for the row set S1 (pivot row included) whose XOR equals the
    // basis row with a single 1 in `pivot_col`, as used by row reduction.
    std::vector<int> solve_rows(int pivot_row, int pivot_col) const;

    bool operator==(const ParityMatrix& other) const;

    std::string to_string() const;

private:
    int find_row_slot(int label) const;
    int find_col_slot(int label) const;
    uint64_t active_col_mask() const;

    std::vector<uint64_t> bits_;   // bits_[row_slot] bit col_slot
    std::vector<int> row_labels_;  // active row labels in display order
    std::vector<int> row_slots_;
    std::vector<int> col_labels_;
    std::vector<int> col_slots_;
};

// Each R(i, j) in application order becomes CNOT(j, i), appended in the same
// order.
CnotCircuit ops_to_circuit(const std::vector<RowOp>& ops, int num_qubits);

// True iff applying `ops` left to right to A yields P. P must be a
// permutation matrix.
bool verify_synthesis(const ParityMatrix& a, const std::vector<RowOp>& ops, const ParityMatrix& p);

} // namespace qroute
