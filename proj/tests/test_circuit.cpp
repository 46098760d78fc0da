#include <doctest.h>

#include "benchgen.hpp"
#include "circuit.hpp"
#include "error.hpp"
#include "parity_matrix.hpp"
#include "rng.hpp"

using namespace qroute;

TEST_CASE("simple format parse") {
    CnotCircuit c = parse_circuit("qubits 2\ncx 0 1\n", CircuitFormat::simple);
    CHECK(c.num_qubits == 2);
    CHECK(c.gates == std::vector<Gate>{{0, 1}});

    CnotCircuit commented = parse_circuit("# header comment\nqubits 3\ncx 0 1 # trailing\ncx 2 0\n",
                                          CircuitFormat::simple);
    CHECK(commented.gates == std::vector<Gate>{{0, 1}, {2, 0}});

    CHECK_THROWS_AS(parse_circuit("qubits 2\ncx 0 2\n", CircuitFormat::simple), Error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0\n", CircuitFormat::simple), Error);
    CHECK_THROWS_AS(parse_circuit("cx 0 1\n", CircuitFormat::simple), Error);
}

TEST_CASE("qasm-lite parse") {
    CnotCircuit c =
        parse_circuit("OPENQASM 2.0; qreg q[2]; cx q[1],q[0];", CircuitFormat::qasm_lite);
    CHECK(c.num_qubits == 2);
    CHECK(c.gates == std::vector<Gate>{{1, 0}});

    CnotCircuit spaced = parse_circuit(
        "OPENQASM 2.0;\n// two gates\nqreg r[3];\ncx r[0],r[1];\ncx r[2],r[1];\n",
        CircuitFormat::qasm_lite);
    CHECK(spaced.gates == std::vector<Gate>{{0, 1}, {2, 1}});

    // Any non-CX statement is a hard error, never silently dropped.
    CHECK_THROWS_AS(
        parse_circuit("OPENQASM 2.0; qreg q[2]; h q[0];", CircuitFormat::qasm_lite), Error);
    CHECK_THROWS_AS(
        parse_circuit("OPENQASM 2.0; qreg q[2]; cx q[0],q[5];", CircuitFormat::qasm_lite), Error);
    CHECK_THROWS_AS(parse_circuit("OPENQASM 3.0; qreg q[2];", CircuitFormat::qasm_lite), Error);

    // Parse errors carry a location.
    try {
        parse_circuit("OPENQASM 2.0;\nqreg q[2];\nh q[0];", CircuitFormat::qasm_lite);
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("emit") {
    CnotCircuit empty;
    empty.num_qubits = 4;
    CHECK(emit_circuit(empty, CircuitFormat::simple) == "qubits 4\n");

    CnotCircuit two;
    two.num_qubits = 2;
    two.add(0, 1);
    two.add(1, 0);
    CHECK(emit_circuit(two, CircuitFormat::simple) == "qubits 2\ncx 0 1\ncx 1 0\n");
}

TEST_CASE("parse and emit round trip") {
    Rng rng(5);
    for (int trial = 0; trial < 200; trial++) {
        int n = 2 + static_cast<int>(rng.uniform_below(10));
        CnotCircuit c =
            gen_random_circuit(n, static_cast<int>(rng.uniform_below(40)), rng.next());
        for (CircuitFormat fmt : {CircuitFormat::simple, CircuitFormat::qasm_lite}) {
            CHECK(parse_circuit(emit_circuit(c, fmt), fmt) == c);
        }
    }
}

TEST_CASE("compose") {
    CnotCircuit c = gen_random_circuit(4, 9, 3);
    CnotCircuit empty;
    empty.num_qubits = 4;
    CHECK(compose(c, empty) == c);

    CnotCircuit reversed;
    reversed.num_qubits = 4;
    for (size_t i = c.gates.size(); i-- > 0;) {
        reversed.gates.push_back(c.gates[i]);
    }
    CnotCircuit both = compose(c, reversed);
    CHECK(both.size() == c.size() + reversed.size());
    CHECK(ParityMatrix::from_circuit(both, 4) == ParityMatrix::identity(4));

    CnotCircuit wider;
    wider.num_qubits = 5;
    CHECK_THROWS_AS(compose(c, wider), Error);
}

TEST_CASE("apply_map") {
    CnotCircuit c = gen_random_circuit(4, 6, 9);
    CHECK(apply_map(c, QubitMap::identity(4)).gates == c.gates);

    CnotCircuit mapped = apply_map(c, QubitMap({3, 0, 1, 2}));
    CHECK(mapped.size() == c.size());
    std::vector<int> phi = {3, 0, 1, 2};
    for (size_t i = 0; i < c.gates.size(); i++) {
        CHECK(mapped.gates[i].control == phi[static_cast<size_t>(c.gates[i].control)]);
        CHECK(mapped.gates[i].target == phi[static_cast<size_t>(c.gates[i].target)]);
    }

    CHECK_THROWS_AS(QubitMap({1, 1, 2}), Error);
}

TEST_CASE("ops_to_circuit") {
    CHECK(ops_to_circuit({}, 3).gates.empty());
    CHECK(ops_to_circuit({{1, 0}}, 2).gates == std::vector<Gate>{{0, 1}});

    // First reduction step of the running example: column pass then row pass.
    std::vector<RowOp> ops = {{3, 2}, {2, 1}, {2, 3}, {1, 2}, {0, 1}, {1, 0}};
    CnotCircuit c = ops_to_circuit(ops, 4);
    CHECK(c.gates ==
          std::vector<Gate>{{2, 3}, {1, 2}, {3, 2}, {2, 1}, {1, 0}, {0, 1}});
}

TEST_CASE("ops_to_circuit is consistent with from_circuit") {
    Rng rng(17);
    for (int trial = 0; trial < 100; trial++) {
        int n = 2 + static_cast<int>(rng.uniform_below(6));
        std::vector<RowOp> ops;
        for (int i = 0; i < 12; i++) {
            int s = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n)));
            int t = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n - 1)));
            if (t >= s) {
                t++;
            }
            ops.push_back({s, t});
        }
        // The circuit built from the ops must satisfy the synthesis relation:
        // applying the ops to its parity matrix recovers the identity.
        ParityMatrix a = ParityMatrix::from_circuit(ops_to_circuit(ops, n), n);
        a.apply_row_ops(ops);
        CHECK(a == ParityMatrix::identity(n));
    }
}
