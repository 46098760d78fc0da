#include "synthesis.hpp"

#include <algorithm>
#include <set>

#include "cost.hpp"
#include "error.hpp"

namespace qroute {

namespace {

// Topology restricted to the tree's edges, so shortest paths during the first
// pass cannot leave the tree.
Topology tree_as_topology(const SteinerTree& tree, const Topology& g) {
    std::vector<std::pair<std::pair<int, int>, double>> edges;
    edges.reserve(tree.edges.size());
    for (const auto& [p, c] : tree.edges) {
        edges.push_back({{p, c}, g.weight(p, c)});
    }
    return make_topology(edges);
}

} // namespace

std::vector<RowOp> first_pass_ops(const SteinerTree& tree, const Topology& g, double alpha,
                                  bool row_mode, double* cost_out) {
    std::vector<RowOp> ops;
    if (tree.steiner_nodes.empty()) {
        if (cost_out) {
            *cost_out = 0.0;
        }
        return ops;
    }
    Topology tg = tree_as_topology(tree, g);
    ShortestPaths sp = shortest_paths(tg, tree.terminals, alpha, true);
    std::set<std::pair<int, int>> seen;
    std::vector<double> weights;
    for (int u : tree.steiner_nodes) {
        // Path from the cheapest-reaching terminal to u. Forward order keeps
        // each hop's source ahead of the hops that depend on it.
        for (const auto& [a, b] : sp.path_from_source(u)) {
            if (!seen.insert({a, b}).second) {
                continue;
            }
            // Column mode moves terminal parities toward the Steiner node;
            // row mode moves Steiner rows toward the terminal.
            ops.push_back(row_mode ? RowOp{b, a} : RowOp{a, b});
            weights.push_back(g.weight(a, b));
        }
    }
    if (cost_out) {
        *cost_out = path_cost(weights, alpha);
    }
    return ops;
}

std::vector<RowOp> reduce_column(ParityMatrix& a, const Topology& g, int r, int c,
                                 ReduceMode mode, double alpha,
                                 std::optional<ColumnTraversal> cached) {
    std::vector<RowOp> ops;
    if (a.col_is_basis(c, r)) {
        return ops;
    }
    std::vector<int> terminals = a.rows_with_one(c);
    if (!std::binary_search(terminals.begin(), terminals.end(), r)) {
        terminals.push_back(r); // rowcol may pivot on a row without a 1 in column r
    }
    SteinerTree tree = cached ? std::move(cached->tree)
                              : steiner_tree(g, r, terminals, alpha,
                                             mode == ReduceMode::noise_aware);
    auto emit = [&](RowOp op) {
        a.apply_row_op(op);
        ops.push_back(op);
    };
    if (mode == ReduceMode::noise_aware) {
        std::vector<RowOp> first =
            cached ? std::move(cached->first_pass) : first_pass_ops(tree, g, alpha, false);
        for (const RowOp& op : first) {
            emit(op);
        }
    } else {
        // Leaves to root; fill each parity-0 parent from its child.
        for (size_t i = tree.edges.size(); i-- > 0;) {
            auto [p, ch] = tree.edges[i];
            if (a.get(p, c) == 0) {
                emit({ch, p});
            }
        }
    }
    // Leaves to root; add every parent to its child. Only the root keeps a 1.
    for (size_t i = tree.edges.size(); i-- > 0;) {
        auto [p, ch] = tree.edges[i];
        emit({p, ch});
    }
    if (!a.col_is_basis(c, r)) {
        throw Error(ErrorCode::internal, "column reduction failed to reach a basis column");
    }
    return ops;
}

std::vector<RowOp> reduce_row(ParityMatrix& a, const Topology& g, int r, int c, ReduceMode mode,
                              double alpha) {
    std::vector<RowOp> ops;
    if (a.row_is_basis(r, c)) {
        return ops;
    }
    std::vector<int> terminals = a.solve_rows(r, c);
    SteinerTree tree = steiner_tree(g, r, terminals, alpha, mode == ReduceMode::noise_aware);
    auto emit = [&](RowOp op) {
        a.apply_row_op(op);
        ops.push_back(op);
    };
    if (mode == ReduceMode::noise_aware) {
        for (const RowOp& op : first_pass_ops(tree, g, alpha, true)) {
            emit(op);
        }
    } else {
        // Root to leaves; add every Steiner node to its parent.
        for (const auto& [p, ch] : tree.edges) {
            if (!tree.is_terminal(ch)) {
                emit({ch, p});
            }
        }
    }
    // Leaves to root; add every child to its parent. Terminal rows reach the
    // root once, Steiner rows twice, so only the terminal sum survives.
    for (size_t i = tree.edges.size(); i-- > 0;) {
        auto [p, ch] = tree.edges[i];
        emit({ch, p});
    }
    if (!a.row_is_basis(r, c) || !a.col_is_basis(c, r)) {
        throw Error(ErrorCode::internal, "row reduction failed to reach a basis row");
    }
    return ops;
}

namespace {

std::vector<int> candidate_rows(const ParityMatrix& a, const Topology& g) {
    std::vector<int> rows = non_cut_vertices(g);
    std::vector<int> out;
    for (int v : rows) {
        if (a.has_row(v)) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::internal, "no candidate pivot rows");
    }
    return out;
}

std::vector<int> min_weight_rows(const ParityMatrix& a, const std::vector<int>& rows) {
    int best = ParityMatrix::max_dim + 1;
    std::vector<int> out;
    for (int v : rows) {
        int w = a.row_weight(v);
        if (w < best) {
            best = w;
            out.clear();
        }
        if (w == best) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

int select_pivot_row_perm(const ParityMatrix& a, const Topology& g) {
    return min_weight_rows(a, candidate_rows(a, g)).front();
}

int select_pivot_col_perm(const ParityMatrix& a, int pivot_row) {
    std::vector<int> candidates = a.cols_with_one(pivot_row);
    if (candidates.empty()) {
        throw Error(ErrorCode::internal, "pivot row is zero; matrix lost full rank");
    }
    int best_col = -1;
    int best_weight = ParityMatrix::max_dim + 1;
    for (int c : candidates) {
        int w = a.col_weight(c);
        if (w < best_weight) {
            best_weight = w;
            best_col = c;
        }
    }
    return best_col;
}

int select_pivot_row_na(const ParityMatrix& a, const Topology& g) {
    std::vector<int> tied = min_weight_rows(a, candidate_rows(a, g));
    int best = tied.front();
    double best_weight = avg_incident_weight(g, best);
    for (size_t i = 1; i < tied.size(); i++) {
        double w = avg_incident_weight(g, tied[i]);
        if (w < best_weight) {
            best_weight = w;
            best = tied[i];
        }
    }
    return best;
}

std::pair<int, std::optional<ColumnTraversal>> select_pivot_col_na(const ParityMatrix& a,
                                                                   const Topology& g,
                                                                   int pivot_row, double alpha) {
    std::vector<int> candidates = a.cols_with_one(pivot_row);
    if (candidates.empty()) {
        throw Error(ErrorCode::internal, "pivot row is zero; matrix lost full rank");
    }
    for (int c : candidates) {
        if (a.col_weight(c) == 1) {
            return {c, std::nullopt}; // already a basis vector, nothing to traverse
        }
    }
    int best_col = -1;
    double best_cost = 0;
    std::optional<ColumnTraversal> best;
    for (int c : candidates) {
        ColumnTraversal t;
        t.tree = steiner_tree(g, pivot_row, a.rows_with_one(c), alpha, true);
        t.first_pass = first_pass_ops(t.tree, g, alpha, false, &t.first_pass_cost);
        if (best_col < 0 || t.first_pass_cost < best_cost) {
            best_col = c;
            best_cost = t.first_pass_cost;
            best = std::move(t);
        }
    }
    return {best_col, std::move(best)};
}

namespace {

SynthesisResult run_reduction(const ParityMatrix& a0, const Topology& g0, Algorithm algo,
                              double alpha) {
    ParityMatrix a = a0;
    Topology g = g0;

    {
        std::vector<int> rows = a.row_labels();
        std::sort(rows.begin(), rows.end());
        if (rows != g.vertices) {
            throw Error(ErrorCode::invalid_argument,
                        "matrix row labels must match the topology vertices");
        }
        if (algo == Algorithm::rowcol) {
            std::vector<int> cols = a.col_labels();
            std::sort(cols.begin(), cols.end());
            if (cols != rows) {
                throw Error(ErrorCode::invalid_argument,
                            "rowcol needs identical row and column label sets");
            }
        }
        if (a.rank() != a.active_dim()) {
            throw Error(ErrorCode::invalid_argument, "parity matrix must have full rank");
        }
    }

    ReduceMode mode =
        algo == Algorithm::napermrowcol ? ReduceMode::noise_aware : ReduceMode::perm;
    SynthesisResult result;
    std::vector<std::pair<int, int>> perm_pairs;

    while (g.vertices.size() > 1) {
        ReductionRecord rec;
        std::optional<ColumnTraversal> cached;
        switch (algo) {
            case Algorithm::rowcol:
                rec.pivot_row = non_cut_vertices(g).front();
                rec.pivot_col = rec.pivot_row;
                break;
            case Algorithm::permrowcol:
                rec.pivot_row = select_pivot_row_perm(a, g);
                rec.pivot_col = select_pivot_col_perm(a, rec.pivot_row);
                break;
            case Algorithm::napermrowcol: {
                rec.pivot_row = select_pivot_row_na(a, g);
                auto [col, cache] = select_pivot_col_na(a, g, rec.pivot_row, alpha);
                rec.pivot_col = col;
                cached = std::move(cache);
                break;
            }
        }
        rec.column_ops =
            reduce_column(a, g, rec.pivot_row, rec.pivot_col, mode, alpha, std::move(cached));
        rec.row_ops = reduce_row(a, g, rec.pivot_row, rec.pivot_col, mode, alpha);
        rec.removed_vertex = rec.pivot_row;

        result.ops.insert(result.ops.end(), rec.column_ops.begin(), rec.column_ops.end());
        result.ops.insert(result.ops.end(), rec.row_ops.begin(), rec.row_ops.end());
        perm_pairs.push_back({rec.pivot_row, rec.pivot_col});

        a.remove_row(rec.pivot_row);
        a.remove_col(rec.pivot_col);
        g = remove_vertex(g, rec.pivot_row);
        result.per_step.push_back(std::move(rec));
    }

    // The surviving vertex closes the permutation.
    if (a.active_dim() != 1 || a.get(a.row_labels().front(), a.col_labels().front()) != 1) {
        throw Error(ErrorCode::internal, "reduction did not terminate on a permutation");
    }
    perm_pairs.push_back({a.row_labels().front(), a.col_labels().front()});

    size_t n = a0.row_labels().size();
    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    std::vector<int> row_labels = a0.row_labels();
    std::vector<int> col_labels = a0.col_labels();
    for (const auto& [r, c] : perm_pairs) {
        size_t ri = static_cast<size_t>(
            std::find(row_labels.begin(), row_labels.end(), r) - row_labels.begin());
        size_t ci = static_cast<size_t>(
            std::find(col_labels.begin(), col_labels.end(), c) - col_labels.begin());
        entries[ri][ci] = 1;
    }
    result.permutation = ParityMatrix::from_entries(row_labels, col_labels, entries);

    int width = 0;
    for (int v : g0.vertices) {
        width = std::max(width, v + 1);
    }
    result.circuit = ops_to_circuit(result.ops, width);
    return result;
}

} // namespace

SynthesisResult rowcol(const ParityMatrix& a, const Topology& g) {
    return run_reduction(a, g, Algorithm::rowcol, 1.0);
}

SynthesisResult permrowcol(const ParityMatrix& a, const Topology& g) {
    return run_reduction(a, g, Algorithm::permrowcol, 1.0);
}

SynthesisResult napermrowcol(const ParityMatrix& a, const Topology& g, double alpha) {
    return run_reduction(a, g, Algorithm::napermrowcol, alpha);
}

SynthesisResult synthesize(Algorithm algo, const ParityMatrix& a, const Topology& g,
                           double alpha) {
    return run_reduction(a, g, algo, alpha);
}

} // namespace qroute
