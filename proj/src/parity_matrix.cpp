#include "parity_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "error.hpp"

namespace qroute {

ParityMatrix ParityMatrix::identity(int n) {
    if (n < 1 || n > max_dim) {
        throw Error(ErrorCode::invalid_argument, "matrix dimension must be in [1, 64]");
    }
    ParityMatrix m;
    m.bits_.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; i++) {
        m.bits_[static_cast<size_t>(i)] = 1ULL << i;
        m.row_labels_.push_back(i);
        m.row_slots_.push_back(i);
        m.col_labels_.push_back(i);
        m.col_slots_.push_back(i);
    }
    return m;
}

ParityMatrix ParityMatrix::from_circuit(const CnotCircuit& c, int n) {
    if (c.num_qubits > n) {
        throw Error(ErrorCode::invalid_argument, "circuit wider than requested dimension");
    }
    ParityMatrix m = identity(n);
    for (const Gate& g : c.gates) {
        if (g.control >= n || g.target >= n) {
            throw Error(ErrorCode::invalid_argument, "gate index out of range");
        }
        // CNOT(c, t) acts as the column operation C(c, t): column t ^= column c.
        uint64_t cbit = 1ULL << g.control;
        uint64_t tbit = 1ULL << g.target;
        for (auto& row : m.bits_) {
            if (row & cbit) {
                row ^= tbit;
            }
        }
    }
    return m;
}

ParityMatrix ParityMatrix::from_entries(const std::vector<int>& row_labels,
                                        const std::vector<int>& col_labels,
                                        const std::vector<std::vector<int>>& entries) {
    size_t n = row_labels.size();
    if (n == 0 || n > max_dim || col_labels.size() != n || entries.size() != n) {
        throw Error(ErrorCode::invalid_argument, "bad matrix shape");
    }
    ParityMatrix m;
    m.bits_.assign(n, 0);
    for (size_t i = 0; i < n; i++) {
        m.row_labels_.push_back(row_labels[i]);
        m.row_slots_.push_back(static_cast<int>(i));
        m.col_labels_.push_back(col_labels[i]);
        m.col_slots_.push_back(static_cast<int>(i));
        if (entries[i].size() != n) {
            throw Error(ErrorCode::invalid_argument, "bad matrix shape");
        }
        for (size_t j = 0; j < n; j++) {
            if (entries[i][j]) {
                m.bits_[i] |= 1ULL << j;
            }
        }
    }
    return m;
}

int ParityMatrix::find_row_slot(int label) const {
    for (size_t i = 0; i < row_labels_.size(); i++) {
        if (row_labels_[i] == label) {
            return row_slots_[i];
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown row label " + std::to_string(label));
}

int ParityMatrix::find_col_slot(int label) const {
    for (size_t i = 0; i < col_labels_.size(); i++) {
        if (col_labels_[i] == label) {
            return col_slots_[i];
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown column label " + std::to_string(label));
}

bool ParityMatrix::has_row(int label) const {
    return std::find(row_labels_.begin(), row_labels_.end(), label) != row_labels_.end();
}

bool ParityMatrix::has_col(int label) const {
    return std::find(col_labels_.begin(), col_labels_.end(), label) != col_labels_.end();
}

uint64_t ParityMatrix::active_col_mask() const {
    uint64_t mask = 0;
    for (int s : col_slots_) {
        mask |= 1ULL << s;
    }
    return mask;
}

int ParityMatrix::get(int row_label, int col_label) const {
    return static_cast<int>((bits_[static_cast<size_t>(find_row_slot(row_label))] >>
                             find_col_slot(col_label)) &
                            1);
}

void ParityMatrix::apply_row_op(const RowOp& op) {
    if (op.source == op.target) {
        throw Error(ErrorCode::invalid_argument, "row operation source equals target");
    }
    int src = find_row_slot(op.source);
    int dst = find_row_slot(op.target);
    bits_[static_cast<size_t>(dst)] ^= bits_[static_cast<size_t>(src)];
}

void ParityMatrix::apply_row_ops(const std::vector<RowOp>& ops) {
    for (const RowOp& op : ops) {
        apply_row_op(op);
    }
}

int ParityMatrix::row_weight(int row_label) const {
    uint64_t row = bits_[static_cast<size_t>(find_row_slot(row_label))] & active_col_mask();
    return std::popcount(row);
}

int ParityMatrix::col_weight(int col_label) const {
    int cs = find_col_slot(col_label);
    int w = 0;
    for (int s : row_slots_) {
        w += static_cast<int>((bits_[static_cast<size_t>(s)] >> cs) & 1);
    }
    return w;
}

bool ParityMatrix::row_is_basis(int row_label, int col_label) const {
    uint64_t row = bits_[static_cast<size_t>(find_row_slot(row_label))] & active_col_mask();
    return row == (1ULL << find_col_slot(col_label));
}

bool ParityMatrix::col_is_basis(int col_label, int row_label) const {
    int cs = find_col_slot(col_label);
    int rs = find_row_slot(row_label);
    for (int s : row_slots_) {
        uint64_t bit = (bits_[static_cast<size_t>(s)] >> cs) & 1;
        if (bit != static_cast<uint64_t>(s == rs ? 1 : 0)) {
            return false;
        }
    }
    return true;
}

std::vector<int> ParityMatrix::cols_with_one(int row_label) const {
    uint64_t row = bits_[static_cast<size_t>(find_row_slot(row_label))];
    std::vector<int> out;
    for (size_t j = 0; j < col_labels_.size(); j++) {
        if ((row >> col_slots_[j]) & 1) {
            out.push_back(col_labels_[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ParityMatrix::rows_with_one(int col_label) const {
    int cs = find_col_slot(col_label);
    std::vector<int> out;
    for (size_t i = 0; i < row_labels_.size(); i++) {
        if ((bits_[static_cast<size_t>(row_slots_[i])] >> cs) & 1) {
            out.push_back(row_labels_[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ParityMatrix::rank() const {
    uint64_t mask = active_col_mask();
    std::vector<uint64_t> rows;
    rows.reserve(row_slots_.size());
    for (int s : row_slots_) {
        rows.push_back(bits_[static_cast<size_t>(s)] & mask);
    }
    int rank = 0;
    for (int c = 0; c < max_dim; c++) {
        if (!((mask >> c) & 1)) {
            continue;
        }
        uint64_t bit = 1ULL << c;
        size_t pivot = rows.size();
        for (size_t i = static_cast<size_t>(rank); i < rows.size(); i++) {
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != static_cast<size_t>(rank) && (rows[i] & bit)) {
                rows[i] ^= rows[static_cast<size_t>(rank)];
            }
        }
        rank++;
    }
    return rank;
}

bool ParityMatrix::is_permutation() const {
    uint64_t mask = active_col_mask();
    uint64_t seen = 0;
    for (int s : row_slots_) {
        uint64_t row = bits_[static_cast<size_t>(s)] & mask;
        if (std::popcount(row) != 1 || (seen & row)) {
            return false;
        }
        seen |= row;
    }
    return seen == mask;
}

void ParityMatrix::relabel(const QubitMap& map) {
    auto relabel_one = [&](int label) {
        if (label >= map.size()) {
            throw Error(ErrorCode::invalid_argument, "relabel map does not cover label " + std::to_string(label));
        }
        return map(label);
    };
    for (int& l : row_labels_) {
        l = relabel_one(l);
    }
    for (int& l : col_labels_) {
        l = relabel_one(l);
    }
}

void ParityMatrix::remove_row(int label) {
    for (size_t i = 0; i < row_labels_.size(); i++) {
        if (row_labels_[i] == label) {
            row_labels_.erase(row_labels_.begin() + static_cast<long>(i));
            row_slots_.erase(row_slots_.begin() + static_cast<long>(i));
            return;
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown row label");
}

void ParityMatrix::remove_col(int label) {
    for (size_t i = 0; i < col_labels_.size(); i++) {
        if (col_labels_[i] == label) {
            col_labels_.erase(col_labels_.begin() + static_cast<long>(i));
            col_slots_.erase(col_slots_.begin() + static_cast<long>(i));
            return;
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown column label");
}

std::vector<int> ParityMatrix::solve_rows(int pivot_row, int pivot_col) const {
    uint64_t mask = active_col_mask();
    uint64_t target = (bits_[static_cast<size_t>(find_row_slot(pivot_row))] & mask) ^
                      (1ULL << find_col_slot(pivot_col));

    // Express the target as a combination of active rows by Gaussian
    // elimination, tracking which original rows enter each reduced row.
    size_t n = row_labels_.size();
    std::vector<uint64_t> rows(n);
    std::vector<uint64_t> combos(n);
    for (size_t i = 0; i < n; i++) {
        rows[i] = bits_[static_cast<size_t>(row_slots_[i])] & mask;
        combos[i] = 1ULL << i;
    }
    uint64_t target_combo = 0;
    size_t rank = 0;
    for (int c = 0; c < max_dim && rank < n; c++) {
        if (!((mask >> c) & 1)) {
            continue;
        }
        uint64_t bit = 1ULL << c;
        size_t pivot = n;
        for (size_t i = rank; i < n; i++) {
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        std::swap(combos[rank], combos[pivot]);
        for (size_t i = 0; i < n; i++) {
            if (i != rank && (rows[i] & bit)) {
                rows[i] ^= rows[rank];
                combos[i] ^= combos[rank];
            }
        }
        if (target & bit) {
            target ^= rows[rank];
            target_combo ^= combos[rank];
        }
        rank++;
    }
    if (target != 0) {
        throw Error(ErrorCode::no_solution, "row system has no solution; matrix lost full rank");
    }

    std::vector<int> result;
    for (size_t i = 0; i < n; i++) {
        if ((target_combo >> i) & 1) {
            result.push_back(row_labels_[i]);
        }
    }
    // Toggle the pivot row in so the returned set XORs to the basis row.
    auto it = std::find(result.begin(), result.end(), pivot_row);
    if (it == result.end()) {
        result.push_back(pivot_row);
    } else {
        result.erase(it);
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool ParityMatrix::operator==(const ParityMatrix& other) const {
    if (row_labels_.size() != other.row_labels_.size() ||
        col_labels_.size() != other.col_labels_.size()) {
        return false;
    }
    std::vector<int> rows = row_labels_;
    std::vector<int> cols = col_labels_;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    {
        std::vector<int> orows = other.row_labels_;
        std::vector<int> ocols = other.col_labels_;
        std::sort(orows.begin(), orows.end());
        std::sort(ocols.begin(), ocols.end());
        if (rows != orows || cols != ocols) {
            return false;
        }
    }
    for (int r : rows) {
        for (int c : cols) {
            if (get(r, c) != other.get(r, c)) {
                return false;
            }
        }
    }
    return true;
}

std::string ParityMatrix::to_string() const {
    std::ostringstream os;
    os << "     ";
    for (int c : col_labels_) {
        os << c << "' ";
    }
    os << "\n";
    for (size_t i = 0; i < row_labels_.size(); i++) {
        os << row_labels_[i] << " [ ";
        for (size_t j = 0; j < col_labels_.size(); j++) {
            os << ((bits_[static_cast<size_t>(row_slots_[i])] >> col_slots_[j]) & 1) << "  ";
        }
        os << "]\n";
    }
    return os.str();
}

CnotCircuit ops_to_circuit(const std::vector<RowOp>& ops, int num_qubits) {
    CnotCircuit c;
    c.num_qubits = num_qubits;
    c.gates.reserve(ops.size());
    for (const RowOp& op : ops) {
        c.gates.push_back({op.target, op.source});
    }
    return c;
}

bool verify_synthesis(const ParityMatrix& a, const std::vector<RowOp>& ops, const ParityMatrix& p) {
    if (!p.is_permutation()) {
        throw Error(ErrorCode::invalid_argument, "target matrix is not a permutation");
    }
    ParityMatrix work = a;
    work.apply_row_ops(ops);
    return work == p;
}

} // namespace qroute
