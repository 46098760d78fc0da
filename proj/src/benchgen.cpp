#include "benchgen.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "backends.hpp"
#include "cost.hpp"
#include "error.hpp"
#include "fidelity.hpp"
#include "parity_matrix.hpp"
#include "rng.hpp"

namespace qroute {

CnotCircuit gen_random_circuit(int n, int m, uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorCode::invalid_argument, "random circuits need at least 2 qubits");
    }
    Rng rng(seed);
    CnotCircuit c;
    c.num_qubits = n;
    c.gates.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; i++) {
        int control = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n)));
        int target = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n - 1)));
        if (target >= control) {
            target++;
        }
        c.gates.push_back({control, target});
    }
    return c;
}

CnotCircuit gen_topology_circuit(const Topology& g, int m, uint64_t seed) {
    if (g.edges.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "topology method needs at least 2 edges");
    }
    std::vector<Gate> directed;
    for (const auto& e : g.edges) {
        directed.push_back({e.first.first, e.first.second});
        directed.push_back({e.first.second, e.first.first});
    }
    Rng rng(seed);
    CnotCircuit c;
    c.num_qubits = g.vertices.back() + 1;
    c.gates.reserve(static_cast<size_t>(m));
    size_t prev = directed.size(); // sentinel: first draw is unrestricted
    for (int i = 0; i < m; i++) {
        size_t pick;
        if (prev == directed.size()) {
            pick = rng.uniform_below(directed.size());
        } else {
            pick = rng.uniform_below(directed.size() - 1);
            if (pick >= prev) {
                pick++;
            }
        }
        c.gates.push_back(directed[pick]);
        prev = pick;
    }
    return c;
}

double rmse(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw Error(ErrorCode::invalid_argument, "rmse needs equal non-empty sequences");
    }
    double sum = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double d = xs[i] - ys[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(xs.size()));
}

double max_distance(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
        throw Error(ErrorCode::invalid_argument, "max_distance needs equal lengths");
    }
    double best = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        best = std::max(best, std::fabs(xs[i] - ys[i]));
    }
    return best;
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::rowcol: return "rowcol";
        case Algorithm::permrowcol: return "permrowcol";
        case Algorithm::napermrowcol: return "napermrowcol";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    if (name == "rowcol") {
        return Algorithm::rowcol;
    }
    if (name == "permrowcol") {
        return Algorithm::permrowcol;
    }
    if (name == "napermrowcol") {
        return Algorithm::napermrowcol;
    }
    return std::nullopt;
}

BenchConfig parse_bench_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bench config: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorCode::parse, "bench config must be an object");
    }
    BenchConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "backend" && value.is_string()) {
            cfg.backend = value.get<std::string>();
        } else if (key == "widths" && value.is_array()) {
            cfg.widths = value.get<std::vector<int>>();
        } else if (key == "counts" && value.is_array()) {
            cfg.counts = value.get<std::vector<int>>();
        } else if (key == "trials" && value.is_number_integer()) {
            cfg.trials = value.get<int>();
        } else if (key == "seed" && value.is_number_unsigned()) {
            cfg.seed = value.get<uint64_t>();
        } else if (key == "oracle_cap" && value.is_number_integer()) {
            cfg.oracle_cap = value.get<int>();
        } else if (key == "alpha_override" && value.is_number()) {
            cfg.alpha_override = value.get<double>();
        } else if (key == "topology_method" && value.is_boolean()) {
            cfg.topology_method = value.get<bool>();
        } else if (key == "algorithms" && value.is_array()) {
            cfg.algorithms.clear();
            for (const auto& name : value) {
                auto algo = algorithm_from_name(name.get<std::string>());
                if (!algo) {
                    throw Error(ErrorCode::parse,
                                "unknown algorithm '" + name.get<std::string>() + "'");
                }
                cfg.algorithms.push_back(*algo);
            }
        } else {
            throw Error(ErrorCode::parse, "bad bench config field '" + key + "'");
        }
    }
    if (cfg.backend.empty() || cfg.widths.empty() || cfg.counts.empty()) {
        throw Error(ErrorCode::parse, "bench config needs backend, widths and counts");
    }
    if (cfg.trials < 1) {
        throw Error(ErrorCode::parse, "trials must be at least 1");
    }
    for (int m : cfg.counts) {
        if (m < 1) {
            throw Error(ErrorCode::parse, "counts must be at least 1");
        }
    }
    return cfg;
}

std::vector<int> first_connected_subset(const Topology& g, int n) {
    int total = static_cast<int>(g.vertices.size());
    if (n < 1 || n > total) {
        throw Error(ErrorCode::invalid_argument, "subset size out of range");
    }
    std::vector<int> pick(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        pick[static_cast<size_t>(i)] = i;
    }
    auto connected = [&](const std::vector<int>& idx) {
        std::vector<int> labels;
        for (int i : idx) {
            labels.push_back(g.vertices[static_cast<size_t>(i)]);
        }
        try {
            induced_subgraph(g, labels);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    for (;;) {
        if (connected(pick)) {
            std::vector<int> labels;
            for (int i : pick) {
                labels.push_back(g.vertices[static_cast<size_t>(i)]);
            }
            return labels;
        }
        // next lexicographic combination
        int i = n - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == total - n + i) {
            i--;
        }
        if (i < 0) {
            throw Error(ErrorCode::disconnected, "no connected subset of that size");
        }
        pick[static_cast<size_t>(i)]++;
        for (int k = i + 1; k < n; k++) {
            pick[static_cast<size_t>(k)] = pick[static_cast<size_t>(k - 1)] + 1;
        }
    }
}

namespace {

struct Cell {
    int width;
    int count;
    int trial;
};

// Fidelity is evaluated on the circuit's own width, so registers are packed
// down to 0..w-1 before calling the oracle.
double oracle_prob(const CnotCircuit& c, const Topology& sub) {
    std::map<int, int> compact;
    for (int v : sub.vertices) {
        int next = static_cast<int>(compact.size());
        compact[v] = next;
    }
    CnotCircuit cc;
    cc.num_qubits = static_cast<int>(sub.vertices.size());
    for (const Gate& g : c.gates) {
        cc.gates.push_back({compact.at(g.control), compact.at(g.target)});
    }
    std::vector<std::pair<std::pair<int, int>, double>> edges;
    for (const auto& e : sub.edges) {
        edges.push_back({{compact.at(e.first.first), compact.at(e.first.second)}, e.second});
    }
    Topology ct = make_topology(edges);
    return avg_gate_fidelity(cc, ct, cc.num_qubits, hard_oracle_cap).prob;
}

} // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg, int jobs, bool with_timing) {
    Topology backend = resolve_backend(cfg.backend);

    struct WidthSetup {
        Topology sub;
        double alpha_value;
    };
    std::map<int, WidthSetup> setups;
    for (int w : cfg.widths) {
        if (setups.count(w)) {
            continue;
        }
        Topology sub = induced_subgraph(backend, first_connected_subset(backend, w));
        double av = cfg.alpha_override ? *cfg.alpha_override : alpha(w);
        setups.emplace(w, WidthSetup{std::move(sub), av});
    }

    std::vector<Cell> cells;
    for (int w : cfg.widths) {
        for (int m : cfg.counts) {
            for (int t = 0; t < cfg.trials; t++) {
                cells.push_back({w, m, t});
            }
        }
    }

    std::vector<std::vector<BenchRecord>> per_cell(cells.size());
    auto run_cell = [&](size_t idx) {
        const Cell& cell = cells[idx];
        const WidthSetup& setup = setups.at(cell.width);
        uint64_t seed = Rng::mix(cfg.seed, static_cast<uint64_t>(cell.width),
                                 static_cast<uint64_t>(cell.count),
                                 static_cast<uint64_t>(cell.trial));
        CnotCircuit logical = cfg.topology_method
                                  ? gen_topology_circuit(setup.sub, cell.count, seed)
                                  : gen_random_circuit(cell.width, cell.count, seed);
        ParityMatrix a0 = [&] {
            if (cfg.topology_method) {
                // Gates already live on subgraph registers.
                ParityMatrix m = ParityMatrix::from_circuit(logical, logical.num_qubits);
                std::vector<int> drop;
                for (int l : m.row_labels()) {
                    if (!setup.sub.has_vertex(l)) {
                        drop.push_back(l);
                    }
                }
                for (int l : drop) {
                    m.remove_row(l);
                    m.remove_col(l);
                }
                return m;
            }
            ParityMatrix m = ParityMatrix::from_circuit(logical, cell.width);
            m.relabel(QubitMap(setup.sub.vertices));
            return m;
        }();

        for (Algorithm algo : cfg.algorithms) {
            BenchRecord rec;
            rec.width = cell.width;
            rec.orig_count = cell.count;
            rec.trial = cell.trial;
            rec.algo = algo;
            rec.seed = seed;
            auto t0 = std::chrono::steady_clock::now();
            SynthesisResult synth = synthesize(algo, a0, setup.sub, setup.alpha_value);
            auto t1 = std::chrono::steady_clock::now();
            if (with_timing) {
                rec.runtime_us =
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            }
            rec.synth_count = synth.circuit.size();
            CostReport cr = cost(synth.circuit, setup.sub, cell.width);
            rec.cost = cr.cost;
            rec.cost1 = cr.cost1;
            rec.cost2 = cr.cost2;
            if (cell.width <= cfg.oracle_cap) {
                rec.prob = oracle_prob(synth.circuit, setup.sub);
            }
            per_cell[idx].push_back(rec);
        }
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); i++) {
            run_cell(i);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        int n_workers = std::min<int>(jobs, static_cast<int>(cells.size()));
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < n_workers; w++) {
            workers.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) {
                        return;
                    }
                    try {
                        run_cell(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto& t : workers) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::vector<BenchRecord> records;
    for (auto& cell_records : per_cell) {
        records.insert(records.end(), cell_records.begin(), cell_records.end());
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const BenchRecord& a, const BenchRecord& b) {
                         return std::tuple(a.width, a.orig_count, a.trial,
                                           static_cast<int>(a.algo)) <
                                std::tuple(b.width, b.orig_count, b.trial,
                                           static_cast<int>(b.algo));
                     });
    return records;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "width,orig_count,algo,seed,synth_count,cost,cost1,cost2,prob,runtime_us\n";
    for (const BenchRecord& r : records) {
        os << r.width << ',' << r.orig_count << ',' << algorithm_name(r.algo) << ',' << r.seed
           << ',' << r.synth_count << ',' << format_double(r.cost) << ',' << format_double(r.cost1)
           << ',' << format_double(r.cost2) << ',';
        if (r.prob) {
            os << format_double(*r.prob);
        }
        os << ',';
        if (r.runtime_us) {
            os << *r.runtime_us;
        }
        os << '\n';
    }
    return os.str();
}

FitSummary cost_fit_study(const std::vector<BenchRecord>& records) {
    std::map<std::pair<int, int>, std::vector<const BenchRecord*>> bins;
    for (const BenchRecord& r : records) {
        if (r.prob) {
            bins[{r.width, r.synth_count}].push_back(&r);
        }
    }
    FitSummary summary;
    std::map<int, std::vector<std::array<double, 4>>> pooled; // width -> (prob, c, c1, c2)
    for (const auto& [key, rs] : bins) {
        if (rs.size() < 3) {
            continue; // too small to average meaningfully
        }
        FitBin bin;
        bin.width = key.first;
        bin.synth_count = key.second;
        bin.n_samples = static_cast<int>(rs.size());
        for (const BenchRecord* r : rs) {
            bin.mean_prob += *r->prob;
            bin.mean_cost += r->cost;
            bin.mean_cost1 += r->cost1;
            bin.mean_cost2 += r->cost2;
            bin.maxdist_cost = std::max(bin.maxdist_cost, std::fabs(*r->prob - r->cost));
            bin.maxdist_cost1 = std::max(bin.maxdist_cost1, std::fabs(*r->prob - r->cost1));
            bin.maxdist_cost2 = std::max(bin.maxdist_cost2, std::fabs(*r->prob - r->cost2));
            pooled[bin.width].push_back({*r->prob, r->cost, r->cost1, r->cost2});
        }
        double n = static_cast<double>(bin.n_samples);
        bin.mean_prob /= n;
        bin.mean_cost /= n;
        bin.mean_cost1 /= n;
        bin.mean_cost2 /= n;
        summary.bins.push_back(bin);
    }
    for (const auto& [width, samples] : pooled) {
        std::vector<double> probs, c0, c1, c2;
        for (const auto& s : samples) {
            probs.push_back(s[0]);
            c0.push_back(s[1]);
            c1.push_back(s[2]);
            c2.push_back(s[3]);
        }
        summary.per_width.push_back(
            {width, rmse(probs, c0), rmse(probs, c1), rmse(probs, c2)});
    }
    return summary;
}

std::string fit_summary_to_csv(const FitSummary& summary) {
    std::ostringstream os;
    os << "width,synth_count,n_samples,mean_prob,mean_cost,mean_cost1,mean_cost2,"
          "maxdist_cost,maxdist_cost1,maxdist_cost2\n";
    for (const FitBin& b : summary.bins) {
        os << b.width << ',' << b.synth_count << ',' << b.n_samples << ','
           << format_double(b.mean_prob) << ',' << format_double(b.mean_cost) << ','
           << format_double(b.mean_cost1) << ',' << format_double(b.mean_cost2) << ','
           << format_double(b.maxdist_cost) << ',' << format_double(b.maxdist_cost1) << ','
           << format_double(b.maxdist_cost2) << '\n';
    }
    return os.str();
}

} // namespace qroute
