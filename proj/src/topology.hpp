#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qroute {

// Undirected edge-weighted connected graph. Vertices carry integer labels,
// edge weights are CNOT error rates.
struct Topology {
    std::string name;
    std::vector<int> vertices;                       // ascending
    std::vector<std::pair<std::pair<int, int>, double>> edges; // ((u, v), w) with u < v

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    double weight(int u, int v) const;
    // Neighbors of v with edge weights, ascending by label.
    std::vector<std::pair<int, double>> neighbors(int v) const;
    int degree(int v) const;
    bool is_connected() const;
};

// Parses the backend JSON schema
//   {"name": str, "num_qubits": int, "edges": [[u, v, weight], ...]}
// rejecting unknown fields, self-loops, duplicate edges, weights outside
// [0, 0.8), and disconnected graphs.
Topology load_backend(const std::string& json_text);

// Builds a topology from explicit edges without the backend weight checks
// (still rejects self-loops, duplicates and disconnection).
Topology make_topology(const std::vector<std::pair<std::pair<int, int>, double>>& edges);

// Vertices whose removal keeps the graph connected.
std::vector<int> non_cut_vertices(const Topology& g);

Topology induced_subgraph(const Topology& g, const std::vector<int>& labels);

Topology remove_vertex(const Topology& g, int v);

double avg_incident_weight(const Topology& g, int v);

// Path minimizing 1 - prod(1 - alpha*p_i), found as a shortest path under the
// additive lengths -ln(1 - alpha*p_i). Returns the edge list from u to v and
// the exact multiplicative cost.
std::pair<std::vector<std::pair<int, int>>, double> cheapest_path(const Topology& g, int u,
                                                                  int v, double alpha);

// Rooted Steiner tree. `edges` lists (parent, child) pairs in construction
// order; walking them in reverse visits children before parents.
struct SteinerTree {
    int root = -1;
    std::vector<int> terminals;                       // ascending, includes root
    std::vector<std::pair<int, int>> edges;           // (parent, child) in construction order
    std::map<int, int> parent;                        // child -> parent
    std::vector<int> steiner_nodes;                   // first-encounter order
    std::vector<int> vertices;                        // ascending

    bool is_terminal(int v) const;
    double total_weight(const Topology& g) const;
};

// Heuristic Steiner tree: the union of cheapest root-to-terminal paths,
// terminals taken in ascending label order over one deterministic shortest-
// path tree. With `use_weights` false, path lengths are hop counts (the
// noise-agnostic variant).
SteinerTree steiner_tree(const Topology& g, int root, const std::vector<int>& terminals,
                         double alpha, bool use_weights = true);

// Deterministic Dijkstra from a set of sources. Used by the Steiner
// construction and by the noise-aware traversals, which need consistent
// parent pointers so that unioned cheapest paths never conflict.
struct ShortestPaths {
    std::map<int, double> dist;
    std::map<int, int> hops;
    std::map<int, int> parent; // toward the source; sources map to themselves

    // Path from the source that reached `v`, listed source -> v as directed
    // (from, to) pairs.
    std::vector<std::pair<int, int>> path_from_source(int v) const;
};

ShortestPaths shortest_paths(const Topology& g, const std::vector<int>& sources, double alpha,
                             bool use_weights);

} // namespace qroute
