#include <doctest.h>

#include "backends.hpp"
#include "benchgen.hpp"
#include "cost.hpp"
#include "error.hpp"
#include "rng.hpp"

using namespace qroute;

TEST_CASE("alpha values") {
    CHECK(alpha(2) == 1.0);
    CHECK(alpha(5) == doctest::Approx(40.0 / 33.0).epsilon(1e-15));
    CHECK(alpha(7) == doctest::Approx(160.0 / 129.0).epsilon(1e-15));
    CHECK_THROWS_AS(alpha(1), Error);
}

TEST_CASE("alpha stays in (1, 5/4) and increases") {
    double prev = alpha(2);
    for (int n = 3; n <= 64; n++) {
        double a = alpha(n);
        CHECK(a > 1.0);
        CHECK(a <= 1.25);
        CHECK(a >= prev);
        if (n <= 50) {
            // Beyond ~2^52 the gap to 5/4 falls under double resolution.
            CHECK(a < 1.25);
            CHECK(a > prev);
        }
        prev = a;
    }
    CHECK(alpha(64) == doctest::Approx(1.25).epsilon(1e-10));
}

TEST_CASE("path_cost") {
    CHECK(path_cost({}, 1.2) == 0.0);
    CHECK(path_cost({0.01}, 1.2) == doctest::Approx(1.2 * 0.01).epsilon(1e-15));
    CHECK(path_cost({0.01, 0.02}, 1.0) == doctest::Approx(1.0 - 0.99 * 0.98).epsilon(1e-15));
    CHECK_THROWS_AS(path_cost({0.9}, 1.2), Error);

    // Log-space branch agrees with the plain product.
    std::vector<double> many(80, 0.01);
    std::vector<double> few(64, 0.01);
    double direct = 1.0;
    for (double p : many) {
        direct *= 1.0 - 1.1 * p;
    }
    CHECK(path_cost(many, 1.1) == doctest::Approx(1.0 - direct).epsilon(1e-12));
    (void)few;
}

TEST_CASE("cost report") {
    Topology g = builtin_backend("nairobi");

    CnotCircuit empty;
    empty.num_qubits = 7;
    CostReport zero = cost(empty, g, 7);
    CHECK(zero.cost == 0.0);
    CHECK(zero.cost1 == 0.0);
    CHECK(zero.cost2 == 0.0);

    CnotCircuit one;
    one.num_qubits = 7;
    one.add(0, 1);
    CostReport r = cost(one, g, 7);
    CHECK(r.cost == doctest::Approx((160.0 / 129.0) * 0.00777).epsilon(1e-12));
    CHECK(r.cost == doctest::Approx(0.0096372).epsilon(1e-5));
    CHECK(r.cost1 == doctest::Approx(0.00777).epsilon(1e-15));
    CHECK(r.cost2 == doctest::Approx(0.00777).epsilon(1e-15));
    CHECK(r.gate_count == 1);

    CnotCircuit bad;
    bad.num_qubits = 7;
    bad.add(0, 3);
    CHECK_THROWS_AS(cost(bad, g, 7), Error);
}

TEST_CASE("cost ordering and monotonicity") {
    Topology g = builtin_backend("guadalupe");
    Rng rng(3);
    for (int trial = 0; trial < 100; trial++) {
        CnotCircuit c =
            gen_topology_circuit(g, 1 + static_cast<int>(rng.uniform_below(60)), rng.next());
        CostReport r = cost(c, g, 16);
        CHECK(r.cost >= 0.0);
        CHECK(r.cost < 1.0);
        // cost2 <= cost <= alpha * cost1 whenever all p_i < 1/alpha.
        CHECK(r.cost2 <= r.cost + 1e-15);
        CHECK(r.cost <= r.alpha * r.cost1 + 1e-15);

        // Appending a noisy gate strictly increases all three.
        CnotCircuit longer = c;
        longer.add(0, 1);
        CostReport r2 = cost(longer, g, 16);
        CHECK(r2.cost > r.cost);
        CHECK(r2.cost1 > r.cost1);
        CHECK(r2.cost2 > r.cost2);
    }
}
