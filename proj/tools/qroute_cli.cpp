// Command-line front-end for the qroute shared library.
//
// Exit codes: 0 success, 2 usage/parse/config errors, 3 infeasible routing
// input (e.g. a qubit map hitting a disconnected subgraph). Diagnostics go to
// stderr; stdout carries data only.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qroute.h"

namespace {

constexpr int exit_config = 2;
constexpr int exit_infeasible = 3;

struct TopologyDeleter {
    void operator()(qr_topology* t) const { qr_topology_free(t); }
};
struct CircuitDeleter {
    void operator()(qr_circuit* c) const { qr_circuit_free(c); }
};
struct SynthesisDeleter {
    void operator()(qr_synthesis* s) const { qr_synthesis_free(s); }
};

using TopologyPtr = std::unique_ptr<qr_topology, TopologyDeleter>;
using CircuitPtr = std::unique_ptr<qr_circuit, CircuitDeleter>;
using SynthesisPtr = std::unique_ptr<qr_synthesis, SynthesisDeleter>;

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "qroute: " << msg << "\n";
    std::exit(code);
}

int exit_code_for(int status) {
    return status == QR_ERR_DISCONNECTED ? exit_infeasible : exit_config;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        die(exit_config, "cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

TopologyPtr load_topology(const std::string& name_or_path) {
    qr_topology* t = nullptr;
    if (int rc = qr_topology_load(name_or_path.c_str(), &t)) {
        die(exit_code_for(rc), qr_last_error());
    }
    return TopologyPtr(t);
}

int format_from_name(const std::string& fmt, const std::string& path) {
    if (fmt == "simple") {
        return QR_FORMAT_SIMPLE;
    }
    if (fmt == "qasm") {
        return QR_FORMAT_QASM_LITE;
    }
    if (!fmt.empty()) {
        die(exit_config, "unknown format '" + fmt + "' (use simple or qasm)");
    }
    return path.size() > 5 && path.substr(path.size() - 5) == ".qasm" ? QR_FORMAT_QASM_LITE
                                                                      : QR_FORMAT_SIMPLE;
}

CircuitPtr load_circuit(const std::string& path, const std::string& fmt) {
    qr_circuit* c = nullptr;
    if (int rc = qr_circuit_parse(read_file(path).c_str(), format_from_name(fmt, path), &c)) {
        die(exit_config, qr_last_error());
    }
    return CircuitPtr(c);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v < 0) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            die(exit_config, "bad map entry '" + item + "'");
        }
    }
    return out;
}

int algo_from_name(const std::string& name) {
    if (name == "rowcol") {
        return QR_ALGO_ROWCOL;
    }
    if (name == "permrowcol") {
        return QR_ALGO_PERMROWCOL;
    }
    if (name == "napermrowcol") {
        return QR_ALGO_NAPERMROWCOL;
    }
    die(exit_config, "unknown algorithm '" + name + "'");
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        die(exit_config, "cannot write '" + out_path + "'");
    }
    out << data;
}

std::string format_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int cmd_synth(const std::string& backend, const std::string& circuit_path, const std::string& fmt,
              const std::string& algo_name, const std::string& map_text, double alpha_override,
              const std::string& out_path) {
    TopologyPtr topo = load_topology(backend);
    CircuitPtr logical = load_circuit(circuit_path, fmt);
    int n = qr_circuit_width(logical.get());

    std::vector<int> phi;
    if (!map_text.empty()) {
        phi = parse_int_list(map_text);
        if (static_cast<int>(phi.size()) != n) {
            die(exit_config, "map must list exactly one register per circuit wire");
        }
    } else {
        // Naive map: wire i on the i-th vertex label.
        if (qr_topology_num_vertices(topo.get()) < n) {
            die(exit_config, "circuit is wider than the backend");
        }
        for (int i = 0; i < n; i++) {
            int label = 0;
            qr_topology_vertex(topo.get(), i, &label);
            phi.push_back(label);
        }
    }

    qr_topology* sub_raw = nullptr;
    if (int rc = qr_topology_induced(topo.get(), phi.data(), n, &sub_raw)) {
        std::string msg = qr_last_error();
        if (map_text.empty() && rc == QR_ERR_DISCONNECTED) {
            msg += " (the default ascending map does not fit this backend; pass --map)";
        }
        die(exit_code_for(rc), msg);
    }
    TopologyPtr sub(sub_raw);

    qr_synthesis* synth_raw = nullptr;
    if (int rc = qr_synthesize(sub.get(), logical.get(), phi.data(), n,
                               algo_from_name(algo_name), alpha_override, &synth_raw)) {
        die(exit_code_for(rc), qr_last_error());
    }
    SynthesisPtr synth(synth_raw);

    qr_circuit* routed_raw = nullptr;
    qr_synthesis_circuit(synth.get(), &routed_raw);
    CircuitPtr routed(routed_raw);

    char* text = nullptr;
    qr_circuit_emit(routed.get(), QR_FORMAT_SIMPLE, &text);
    std::string out(text);
    qr_string_free(text);

    int pairs = qr_synthesis_num_pairs(synth.get());
    std::vector<int> rows(static_cast<size_t>(pairs)), cols(static_cast<size_t>(pairs));
    qr_synthesis_permutation(synth.get(), rows.data(), cols.data());
    out += "perm:";
    for (int i = 0; i < pairs; i++) {
        out += (i == 0 ? " " : ",") + std::to_string(rows[static_cast<size_t>(i)]);
    }
    out += "\n";

    qr_cost_report cr{};
    if (int rc = qr_cost(routed.get(), sub.get(), n, &cr)) {
        die(exit_code_for(rc), qr_last_error());
    }
    out += "cost: " + format_g(cr.cost) + "\n";
    out += "cost1: " + format_g(cr.cost1) + "\n";
    out += "cost2: " + format_g(cr.cost2) + "\n";
    out += "alpha: " + format_g(cr.alpha) + "\n";
    out += "gates: " + std::to_string(cr.gate_count) + "\n";
    write_output(out_path, out);
    return 0;
}

int cmd_fidelity(const std::string& backend, const std::string& circuit_path,
                 const std::string& fmt, int width, int cap) {
    TopologyPtr topo = load_topology(backend);
    CircuitPtr circuit = load_circuit(circuit_path, fmt);
    if (width == 0) {
        width = qr_circuit_width(circuit.get());
    }
    qr_fidelity_report fr{};
    if (int rc = qr_avg_gate_fidelity(circuit.get(), topo.get(), width, cap, &fr)) {
        die(exit_code_for(rc), qr_last_error());
    }
    qr_cost_report cr{};
    if (int rc = qr_cost(circuit.get(), topo.get(), width, &cr)) {
        die(exit_code_for(rc), qr_last_error());
    }
    std::cout << "f_avg: " << format_g(fr.f_avg) << "\n";
    std::cout << "prob: " << format_g(fr.prob) << "\n";
    std::cout << "cost: " << format_g(cr.cost) << "\n";
    std::cout << "cost1: " << format_g(cr.cost1) << "\n";
    std::cout << "cost2: " << format_g(cr.cost2) << "\n";
    return 0;
}

int cmd_gen(const std::string& mode, const std::string& backend, int n, int m, uint64_t seed,
            const std::string& out_path) {
    qr_circuit* raw = nullptr;
    if (mode == "random") {
        if (n < 2) {
            die(exit_config, "random mode needs --n >= 2");
        }
        if (int rc = qr_gen_random_circuit(n, m, seed, &raw)) {
            die(exit_config, qr_last_error());
        }
    } else if (mode == "topo") {
        if (backend.empty()) {
            die(exit_config, "topo mode needs --backend");
        }
        TopologyPtr topo = load_topology(backend);
        if (int rc = qr_gen_topology_circuit(topo.get(), m, seed, &raw)) {
            die(exit_config, qr_last_error());
        }
    } else {
        die(exit_config, "mode must be random or topo");
    }
    CircuitPtr circuit(raw);
    char* text = nullptr;
    qr_circuit_emit(circuit.get(), QR_FORMAT_SIMPLE, &text);
    std::string out(text);
    qr_string_free(text);
    write_output(out_path, out);
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, int jobs, bool timing) {
    std::string config = read_file(config_path);
    char* records = nullptr;
    char* summary = nullptr;
    if (int rc = qr_run_benchmark(config.c_str(), jobs, timing ? 1 : 0, &records, &summary)) {
        die(exit_code_for(rc), qr_last_error());
    }
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream out(out_dir + "/records.csv");
        if (!out) {
            die(exit_config, "cannot write records.csv");
        }
        out << records;
    }
    {
        std::ofstream out(out_dir + "/summary.csv");
        if (!out) {
            die(exit_config, "cannot write summary.csv");
        }
        out << summary;
    }
    qr_string_free(records);
    qr_string_free(summary);
    std::cerr << "wrote " << out_dir << "/records.csv and " << out_dir << "/summary.csv\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noise-aware CNOT circuit routing"};
    app.require_subcommand(1);

    std::string backend, circuit_path, fmt, algo = "napermrowcol", map_text, out_path;
    double alpha_override = -1.0;
    auto* synth = app.add_subcommand("synth", "route a CNOT circuit onto a backend");
    synth->add_option("--backend", backend, "backend name or JSON path")->required();
    synth->add_option("--circuit", circuit_path, "circuit file")->required();
    synth->add_option("--format", fmt, "circuit format: simple or qasm");
    synth->add_option("--algo", algo, "rowcol, permrowcol or napermrowcol");
    synth->add_option("--map", map_text, "comma list: wire i to register map[i]");
    synth->add_option("--alpha", alpha_override, "override the alpha factor");
    synth->add_option("--out", out_path, "write the report here instead of stdout");

    std::string f_backend, f_circuit, f_fmt;
    int f_width = 0, f_cap = 0;
    auto* fid = app.add_subcommand("fidelity", "exact average gate fidelity of a noisy circuit");
    fid->add_option("--backend", f_backend, "backend name or JSON path")->required();
    fid->add_option("--circuit", f_circuit, "circuit file over physical registers")->required();
    fid->add_option("--format", f_fmt, "circuit format: simple or qasm");
    fid->add_option("--width", f_width, "circuit width (default: from the file)");
    fid->add_option("--cap", f_cap, "largest width the oracle accepts (default 13, max 16)");

    std::string g_mode, g_backend, g_out;
    int g_n = 0, g_m = 0;
    uint64_t g_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a seeded CNOT circuit");
    gen->add_option("--mode", g_mode, "random or topo")->required();
    gen->add_option("--backend", g_backend, "backend for topo mode");
    gen->add_option("--n", g_n, "qubit count for random mode");
    gen->add_option("--m", g_m, "gate count")->required();
    gen->add_option("--seed", g_seed, "RNG seed");
    gen->add_option("--out", g_out, "output file (default stdout)");

    std::string b_config, b_out_dir = ".";
    int b_jobs = 1;
    bool b_timing = false;
    auto* bench = app.add_subcommand("bench", "run the seeded benchmark harness");
    bench->add_option("--config", b_config, "JSON benchmark config")->required();
    bench->add_option("--out-dir", b_out_dir, "directory for records.csv and summary.csv");
    bench->add_option("--jobs", b_jobs, "worker threads");
    bench->add_flag("--timing", b_timing, "record per-run timings (breaks byte determinism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config;
    }

    if (synth->parsed()) {
        return cmd_synth(backend, circuit_path, fmt, algo, map_text, alpha_override, out_path);
    }
    if (fid->parsed()) {
        return cmd_fidelity(f_backend, f_circuit, f_fmt, f_width, f_cap);
    }
    if (gen->parsed()) {
        return cmd_gen(g_mode, g_backend, g_n, g_m, g_seed, g_out);
    }
    if (bench->parsed()) {
        return cmd_bench(b_config, b_out_dir, b_jobs, b_timing);
    }
    return exit_config;
}
