#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "backends.hpp"
#include "benchgen.hpp"
#include "error.hpp"

using namespace qroute;

TEST_CASE("gen_random_circuit") {
    CHECK(gen_random_circuit(5, 0, 1).gates.empty());
    CHECK(gen_random_circuit(5, 40, 42) == gen_random_circuit(5, 40, 42));
    CHECK(gen_random_circuit(5, 40, 42).gates != gen_random_circuit(5, 40, 43).gates);
    CHECK_THROWS_AS(gen_random_circuit(1, 4, 0), Error);

    // Every ordered pair appears with frequency within 3 sigma of 1/20.
    std::map<std::pair<int, int>, int> counts;
    int total = 100000;
    CnotCircuit big = gen_random_circuit(5, total, 7);
    for (const Gate& g : big.gates) {
        counts[{g.control, g.target}]++;
    }
    double p = 1.0 / 20.0;
    double sigma = std::sqrt(total * p * (1 - p));
    CHECK(counts.size() == 20);
    for (const auto& [pair, cnt] : counts) {
        (void)pair;
        CHECK(std::fabs(cnt - total * p) < 3.5 * sigma);
    }
}

TEST_CASE("gen_topology_circuit") {
    Topology g = builtin_backend("nairobi");
    CnotCircuit c = gen_topology_circuit(g, 500, 11);
    for (const Gate& gate : c.gates) {
        CHECK(g.has_edge(gate.control, gate.target));
    }
    for (size_t i = 0; i + 1 < c.gates.size(); i++) {
        CHECK(c.gates[i] != c.gates[i + 1]);
    }

    // First draws cover all 12 directed edges roughly uniformly.
    std::map<std::pair<int, int>, int> first;
    int trials = 12000;
    for (int s = 0; s < trials; s++) {
        CnotCircuit one = gen_topology_circuit(g, 1, static_cast<uint64_t>(s));
        first[{one.gates[0].control, one.gates[0].target}]++;
    }
    CHECK(first.size() == 12);
    double expect = trials / 12.0;
    double sigma = std::sqrt(trials * (1.0 / 12.0) * (11.0 / 12.0));
    for (const auto& [pair, cnt] : first) {
        (void)pair;
        CHECK(std::fabs(cnt - expect) < 4 * sigma);
    }
}

TEST_CASE("rmse and max_distance") {
    CHECK(rmse({1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK(rmse({0.5}, {0.4}) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rmse({1, 0}, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(rmse({1.0}, {}), Error);

    CHECK(max_distance({1, 2}, {1, 2}) == 0.0);
    CHECK(max_distance({0.1, 0.9}, {0.2, 0.85}) == doctest::Approx(0.1).epsilon(1e-12));
    std::vector<double> xs = {0.1, 0.9};
    std::vector<double> ys = {0.2, 0.85};
    double before = max_distance(xs, ys);
    xs.push_back(0.5);
    ys.push_back(0.1);
    CHECK(max_distance(xs, ys) >= before);
}

TEST_CASE("first_connected_subset") {
    Topology nairobi = builtin_backend("nairobi");
    // {0,1,2,3,4} is disconnected (qubit 4 couples only to 5), so the first
    // usable 5-subset swaps 4 for 5.
    CHECK(first_connected_subset(nairobi, 5) == std::vector<int>{0, 1, 2, 3, 5});
    CHECK(first_connected_subset(nairobi, 7) == nairobi.vertices);

    Topology guadalupe = builtin_backend("guadalupe");
    CHECK(first_connected_subset(guadalupe, 5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(first_connected_subset(guadalupe, 7) == std::vector<int>{0, 1, 2, 3, 4, 5, 7});
}

TEST_CASE("bench config parsing") {
    BenchConfig cfg = parse_bench_config(R"({
        "backend": "nairobi",
        "widths": [5],
        "counts": [4, 8],
        "trials": 3,
        "seed": 99,
        "algorithms": ["napermrowcol"],
        "oracle_cap": 5
    })");
    CHECK(cfg.backend == "nairobi");
    CHECK(cfg.widths == std::vector<int>{5});
    CHECK(cfg.counts == std::vector<int>{4, 8});
    CHECK(cfg.trials == 3);
    CHECK(cfg.seed == 99);
    CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::napermrowcol});

    CHECK_THROWS_AS(parse_bench_config("{"), Error);
    CHECK_THROWS_AS(parse_bench_config(R"({"backend":"nairobi"})"), Error);
    CHECK_THROWS_AS(parse_bench_config(R"({"backend":"nairobi","widths":[5],"counts":[4],
        "bogus": 1})"),
                    Error);
}

TEST_CASE("run_benchmark basics") {
    BenchConfig cfg;
    cfg.backend = "nairobi";
    cfg.widths = {5};
    cfg.counts = {8};
    cfg.trials = 1;
    cfg.seed = 5;
    cfg.algorithms = {Algorithm::napermrowcol};
    std::vector<BenchRecord> records = run_benchmark(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].width == 5);
    CHECK(records[0].orig_count == 8);
    CHECK(records[0].prob.has_value());
    CHECK(records[0].synth_count >= 0);

    // Identical seeds give identical CSV bytes; a different seed does not.
    cfg.trials = 4;
    cfg.algorithms = {Algorithm::rowcol, Algorithm::permrowcol, Algorithm::napermrowcol};
    std::string csv1 = records_to_csv(run_benchmark(cfg));
    std::string csv2 = records_to_csv(run_benchmark(cfg));
    CHECK(csv1 == csv2);
    cfg.seed = 6;
    CHECK(records_to_csv(run_benchmark(cfg)) != csv1);
}

TEST_CASE("run_benchmark is independent of the worker count") {
    BenchConfig cfg;
    cfg.backend = "nairobi";
    cfg.widths = {5};
    cfg.counts = {4, 16};
    cfg.trials = 5;
    cfg.seed = 1234;
    std::string serial = records_to_csv(run_benchmark(cfg, 1));
    std::string threaded = records_to_csv(run_benchmark(cfg, 4));
    CHECK(serial == threaded);
}

TEST_CASE("prob column is gated by the oracle cap") {
    BenchConfig cfg;
    cfg.backend = "nairobi";
    cfg.widths = {5};
    cfg.counts = {4};
    cfg.trials = 1;
    cfg.oracle_cap = 4;
    std::vector<BenchRecord> records = run_benchmark(cfg);
    for (const BenchRecord& r : records) {
        CHECK(!r.prob.has_value());
    }
    std::string csv = records_to_csv(records);
    CHECK(csv.find(",,\n") != std::string::npos); // empty prob and runtime columns
}

TEST_CASE("zero-noise backends fit perfectly") {
    std::string path = "zero_noise_backend_test.json";
    {
        std::ofstream out(path);
        out << R"({"name":"silent","num_qubits":4,"edges":[
            [0,1,0.0],[1,2,0.0],[2,3,0.0],[0,3,0.0]]})";
    }
    BenchConfig cfg;
    cfg.backend = path;
    cfg.widths = {4};
    cfg.counts = {8};
    cfg.trials = 6;
    cfg.seed = 13;
    cfg.algorithms = {Algorithm::napermrowcol};
    cfg.oracle_cap = 4;
    std::vector<BenchRecord> records = run_benchmark(cfg);
    for (const BenchRecord& r : records) {
        CHECK(r.cost == 0.0);
        CHECK(r.cost1 == 0.0);
        CHECK(r.cost2 == 0.0);
        CHECK(*r.prob == doctest::Approx(0.0).epsilon(1e-14));
    }
    FitSummary summary = cost_fit_study(records);
    for (const auto& w : summary.per_width) {
        CHECK(w.rmse_cost == doctest::Approx(0.0).epsilon(1e-14));
    }
    std::remove(path.c_str());
}

TEST_CASE("cost_fit_study bins and summarizes") {
    BenchConfig cfg;
    cfg.backend = "nairobi";
    cfg.widths = {5};
    cfg.counts = {16, 32};
    cfg.trials = 12;
    cfg.seed = 77;
    cfg.algorithms = {Algorithm::napermrowcol};
    std::vector<BenchRecord> records = run_benchmark(cfg);
    FitSummary summary = cost_fit_study(records);
    REQUIRE(!summary.bins.empty());
    for (const FitBin& bin : summary.bins) {
        CHECK(bin.n_samples >= 3);
        CHECK(bin.mean_prob >= 0.0);
        CHECK(bin.maxdist_cost <= bin.maxdist_cost1 + 1.0); // sanity: finite
    }
    REQUIRE(summary.per_width.size() == 1);
    CHECK(summary.per_width[0].width == 5);
    CHECK(summary.per_width[0].rmse_cost >= 0.0);

    std::string csv = fit_summary_to_csv(summary);
    CHECK(csv.find("width,synth_count,n_samples,mean_prob") == 0);
}
