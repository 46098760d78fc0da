#include "topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include <json.hpp>

#include "error.hpp"

namespace qroute {

bool Topology::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Topology::has_edge(int u, int v) const {
    if (u > v) {
        std::swap(u, v);
    }
    for (const auto& e : edges) {
        if (e.first.first == u && e.first.second == v) {
            return true;
        }
    }
    return false;
}

double Topology::weight(int u, int v) const {
    if (u > v) {
        std::swap(u, v);
    }
    for (const auto& e : edges) {
        if (e.first.first == u && e.first.second == v) {
            return e.second;
        }
    }
    throw Error(ErrorCode::invalid_argument,
                "no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
}

std::vector<std::pair<int, double>> Topology::neighbors(int v) const {
    std::vector<std::pair<int, double>> out;
    for (const auto& e : edges) {
        if (e.first.first == v) {
            out.emplace_back(e.first.second, e.second);
        } else if (e.first.second == v) {
            out.emplace_back(e.first.first, e.second);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Topology::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

namespace {

bool connected_without(const Topology& g, std::optional<int> removed) {
    std::vector<int> verts;
    for (int v : g.vertices) {
        if (!removed || v != *removed) {
            verts.push_back(v);
        }
    }
    if (verts.empty()) {
        return false;
    }
    std::set<int> seen{verts.front()};
    std::vector<int> stack{verts.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [u, w] : g.neighbors(v)) {
            (void)w;
            if (removed && u == *removed) {
                continue;
            }
            if (seen.insert(u).second) {
                stack.push_back(u);
            }
        }
    }
    return seen.size() == verts.size();
}

} // namespace

bool Topology::is_connected() const {
    return connected_without(*this, std::nullopt);
}

Topology make_topology(const std::vector<std::pair<std::pair<int, int>, double>>& edges) {
    Topology g;
    std::set<int> verts;
    std::set<std::pair<int, int>> seen;
    for (auto [uv, w] : edges) {
        auto [u, v] = uv;
        if (u == v) {
            throw Error(ErrorCode::invalid_argument, "self-loop on vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (!seen.insert({u, v}).second) {
            throw Error(ErrorCode::invalid_argument, "duplicate edge (" + std::to_string(u) +
                                                         ", " + std::to_string(v) + ")");
        }
        g.edges.push_back({{u, v}, w});
        verts.insert(u);
        verts.insert(v);
    }
    g.vertices.assign(verts.begin(), verts.end());
    std::sort(g.edges.begin(), g.edges.end());
    if (g.vertices.empty() || !g.is_connected()) {
        throw Error(ErrorCode::disconnected, "graph is not connected");
    }
    return g;
}

Topology load_backend(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("backend JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorCode::parse, "backend JSON must be an object");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "num_qubits" && key != "edges") {
            throw Error(ErrorCode::parse, "unknown backend field '" + key + "'");
        }
    }
    if (!j.contains("name") || !j["name"].is_string() || !j.contains("num_qubits") ||
        !j["num_qubits"].is_number_integer() || !j.contains("edges") || !j["edges"].is_array()) {
        throw Error(ErrorCode::parse, "backend JSON needs name, num_qubits and edges");
    }
    int n = j["num_qubits"].get<int>();
    if (n < 1 || n > 64) {
        throw Error(ErrorCode::parse, "num_qubits must be in [1, 64]");
    }
    std::vector<std::pair<std::pair<int, int>, double>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number()) {
            throw Error(ErrorCode::parse, "edges must be [u, v, weight] triples");
        }
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        double w = e[2].get<double>();
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::parse, "edge endpoint out of range");
        }
        if (w < 0.0 || w >= 0.8) {
            throw Error(ErrorCode::parse, "edge weight must lie in [0, 0.8)");
        }
        edges.push_back({{u, v}, w});
    }
    Topology g = make_topology(edges);
    g.name = j["name"].get<std::string>();
    if (static_cast<int>(g.vertices.size()) != n) {
        throw Error(ErrorCode::disconnected, "backend has isolated qubits");
    }
    return g;
}

std::vector<int> non_cut_vertices(const Topology& g) {
    std::vector<int> out;
    if (g.vertices.size() == 1) {
        return out;
    }
    for (int v : g.vertices) {
        if (connected_without(g, v)) {
            out.push_back(v);
        }
    }
    return out;
}

Topology induced_subgraph(const Topology& g, const std::vector<int>& labels) {
    std::set<int> keep(labels.begin(), labels.end());
    for (int v : labels) {
        if (!g.has_vertex(v)) {
            throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " not in graph");
        }
    }
    Topology out;
    out.name = g.name;
    out.vertices.assign(keep.begin(), keep.end());
    for (const auto& e : g.edges) {
        if (keep.count(e.first.first) && keep.count(e.first.second)) {
            out.edges.push_back(e);
        }
    }
    if (out.vertices.empty() || !out.is_connected()) {
        throw Error(ErrorCode::disconnected, "induced subgraph is not connected");
    }
    return out;
}

Topology remove_vertex(const Topology& g, int v) {
    if (!g.has_vertex(v)) {
        throw Error(ErrorCode::invalid_argument, "vertex not in graph");
    }
    if (!connected_without(g, v)) {
        throw Error(ErrorCode::disconnected,
                    "vertex " + std::to_string(v) + " is a cut vertex");
    }
    Topology out;
    out.name = g.name;
    for (int u : g.vertices) {
        if (u != v) {
            out.vertices.push_back(u);
        }
    }
    for (const auto& e : g.edges) {
        if (e.first.first != v && e.first.second != v) {
            out.edges.push_back(e);
        }
    }
    return out;
}

double avg_incident_weight(const Topology& g, int v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) {
        throw Error(ErrorCode::invalid_argument, "vertex has no incident edges");
    }
    double sum = 0;
    for (const auto& [u, w] : nbrs) {
        (void)u;
        sum += w;
    }
    return sum / static_cast<double>(nbrs.size());
}

ShortestPaths shortest_paths(const Topology& g, const std::vector<int>& sources, double alpha,
                             bool use_weights) {
    ShortestPaths sp;
    // Priority by (distance, hops, label); smaller pops first. On exact ties
    // of (distance, hops) the larger parent label wins, which is what makes
    // equal-cost choices in grid-like graphs reproducible.
    using Item = std::tuple<double, int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (int s : sources) {
        if (!g.has_vertex(s)) {
            throw Error(ErrorCode::invalid_argument, "source vertex not in graph");
        }
        sp.dist[s] = 0.0;
        sp.hops[s] = 0;
        sp.parent[s] = s;
        queue.push({0.0, 0, s});
    }
    auto edge_length = [&](double w) {
        if (!use_weights) {
            return 1.0;
        }
        double q = 1.0 - alpha * w;
        if (q <= 0.0) {
            throw Error(ErrorCode::invalid_argument, "edge weight too large: alpha*p >= 1");
        }
        return -std::log(q);
    };
    while (!queue.empty()) {
        auto [d, h, v] = queue.top();
        queue.pop();
        auto it = sp.dist.find(v);
        if (it != sp.dist.end() && (d > it->second || (d == it->second && h > sp.hops[v]))) {
            continue;
        }
        for (const auto& [u, w] : g.neighbors(v)) {
            double nd = d + edge_length(w);
            int nh = h + 1;
            auto du = sp.dist.find(u);
            bool improve = du == sp.dist.end() || nd < du->second ||
                           (nd == du->second && nh < sp.hops[u]);
            bool tie = du != sp.dist.end() && nd == du->second && nh == sp.hops[u];
            if (improve) {
                sp.dist[u] = nd;
                sp.hops[u] = nh;
                sp.parent[u] = v;
                queue.push({nd, nh, u});
            } else if (tie && v > sp.parent[u]) {
                sp.parent[u] = v;
            }
        }
    }
    return sp;
}

std::vector<std::pair<int, int>> ShortestPaths::path_from_source(int v) const {
    std::vector<std::pair<int, int>> rev;
    int cur = v;
    for (;;) {
        auto it = parent.find(cur);
        if (it == parent.end()) {
            throw Error(ErrorCode::internal, "vertex unreachable in shortest-path tree");
        }
        if (it->second == cur) {
            break;
        }
        rev.push_back({it->second, cur});
        cur = it->second;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::pair<std::vector<std::pair<int, int>>, double> cheapest_path(const Topology& g, int u, int v,
                                                                  double alpha) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw Error(ErrorCode::invalid_argument, "path endpoint not in graph");
    }
    if (u == v) {
        return {{}, 0.0};
    }
    ShortestPaths sp = shortest_paths(g, {u}, alpha, true);
    auto path = sp.path_from_source(v);
    double prod = 1.0;
    for (const auto& [a, b] : path) {
        prod *= 1.0 - alpha * g.weight(a, b);
    }
    return {path, 1.0 - prod};
}

bool SteinerTree::is_terminal(int v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

double SteinerTree::total_weight(const Topology& g) const {
    double sum = 0;
    for (const auto& [p, c] : edges) {
        sum += g.weight(p, c);
    }
    return sum;
}

SteinerTree steiner_tree(const Topology& g, int root, const std::vector<int>& terminals,
                         double alpha, bool use_weights) {
    SteinerTree t;
    t.root = root;
    t.terminals = terminals;
    std::sort(t.terminals.begin(), t.terminals.end());
    t.terminals.erase(std::unique(t.terminals.begin(), t.terminals.end()), t.terminals.end());
    if (!t.is_terminal(root)) {
        throw Error(ErrorCode::invalid_argument, "root must be a terminal");
    }
    for (int v : t.terminals) {
        if (!g.has_vertex(v)) {
            throw Error(ErrorCode::invalid_argument, "terminal not in graph");
        }
    }

    std::set<int> in_tree{root};
    t.parent[root] = root;
    ShortestPaths sp = shortest_paths(g, {root}, alpha, use_weights);
    for (int term : t.terminals) {
        if (term == root) {
            continue;
        }
        for (const auto& [p, c] : sp.path_from_source(term)) {
            if (in_tree.count(c)) {
                continue;
            }
            in_tree.insert(c);
            t.parent[c] = p;
            t.edges.push_back({p, c});
            if (!t.is_terminal(c)) {
                t.steiner_nodes.push_back(c);
            }
        }
    }
    t.vertices.assign(in_tree.begin(), in_tree.end());
    return t;
}

} // namespace qroute
