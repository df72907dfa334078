#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/surgery.hpp"

using namespace degen;

TEST_CASE("pg equality classification") {
    CHECK(pg_equality_check(ComponentGenera::make(3, {1, 1, 1})) == DistanceClass::FiniteDistance);
    CHECK(pg_equality_check(ComponentGenera::make(3, {2, 0})) == DistanceClass::InfiniteDistance);
    CHECK(pg_equality_check(ComponentGenera::make(1, {1, 0, 0})) == DistanceClass::FiniteDistance);
    SUBCASE("the Invariant Cycle bound rejects excess component genus") {
        CHECK_THROWS_AS(ComponentGenera::make(1, {1, 1}), input_error);
        CHECK_THROWS_AS(ComponentGenera::make(2, {-1, 3}), input_error);
    }
    SUBCASE("equality is an exact integer comparison") {
        for (long drop = 1; drop <= 5; ++drop)
            CHECK(pg_equality_check(ComponentGenera::make(10, {10 - drop})) ==
                  DistanceClass::InfiniteDistance);
    }
}

TEST_CASE("single volume component criterion") {
    CHECK(cy_component_criterion({1, 0, 0}).pass);
    CHECK_FALSE(cy_component_criterion({0, 0}).pass);
    SUBCASE("two claimed volume forms are flagged as inconsistent") {
        CyComponentCheck c = cy_component_criterion({1, 1});
        CHECK_FALSE(c.pass);
        CHECK(c.inconsistent_input);
    }
    SUBCASE("h > 1 on one component is not the Calabi-Yau shape") {
        CyComponentCheck c = cy_component_criterion({2, 0});
        CHECK_FALSE(c.pass);
        CHECK(c.inconsistent_input);
    }
}

TEST_CASE("surgery datum validation") {
    CHECK_THROWS_AS(SurgeryDatum::make({2, 0, 1, 1, 1, 0, 1}, 1, 1), input_error); // b0 != 1
    CHECK_THROWS_AS(SurgeryDatum::make({1, 1, 1, 1, 1, 0, 1}, 1, 1), input_error); // b1 != 0
    CHECK_THROWS_AS(SurgeryDatum::make({1, 0, 2, 1, 3, 0, 1}, 1, 1), input_error); // b4 != b2
    CHECK_THROWS_AS(SurgeryDatum::from_b2_b3(1, 10, 0, 0), input_error);           // no nodes
    CHECK_THROWS_AS(SurgeryDatum::from_b2_b3(1, 10, 2, 3), input_error);           // rho > k
    CHECK_THROWS_AS(SurgeryDatum::from_b2_b3(1, 10, 5, 1), input_error);           // b2 < k - rho
}

TEST_CASE("surgery arithmetic on the quintic-like fixture") {
    SurgeryDatum d = SurgeryDatum::from_b2_b3(1, 202, 1, 1);
    SurgeryReport r = surgery_report(d);
    CHECK(r.betti_xs[2] == 1);
    CHECK(r.betti_xs[3] == 204);
    CHECK(r.betti_x0[3] == 203);
    CHECK(r.euler_xs == r.euler_x - 2);
    CHECK(r.euler_x0 == r.euler_x - 1);
    CHECK(r.vanishing_cycle_dim == 1);
    CHECK(r.monodromy_nontrivial);
}

TEST_CASE("surgery arithmetic with several nodes") {
    SurgeryDatum d = SurgeryDatum::from_b2_b3(5, 10, 3, 1);
    SurgeryReport r = surgery_report(d);
    CHECK(r.betti_xs[2] == 3);
    CHECK(r.betti_xs[3] == 12);
    CHECK(r.betti_x0[3] == 11);
    CHECK(r.betti_x0[2] == r.betti_xs[2]);
    CHECK(r.betti_x0[4] == d.betti_x[4]);
}

TEST_CASE("smoothability requires a relation among the exceptional classes") {
    CHECK(friedman_smoothability_flag(SurgeryDatum::from_b2_b3(1, 202, 1, 1)));
    CHECK_FALSE(friedman_smoothability_flag(SurgeryDatum::from_b2_b3(3, 10, 2, 0)));
    CHECK(friedman_smoothability_flag(SurgeryDatum::from_b2_b3(4, 10, 3, 3)));
}

TEST_CASE("surgery identities on random data") {
    gen::Rng rng(112358);
    for (int t = 0; t < 300; ++t) {
        SurgeryDatum d = gen::random_surgery_datum(rng);
        SurgeryReport r = surgery_report(d);

        // Euler closure for both surgered spaces.
        CHECK(r.euler_x - 2 * d.nodes == r.euler_xs);
        CHECK(r.euler_x - d.nodes == r.euler_x0);
        long chi_xs = 0, chi_x0 = 0;
        for (int i = 0; i < 7; ++i) {
            chi_xs += (i % 2 == 0 ? r.betti_xs[i] : -r.betti_xs[i]);
            chi_x0 += (i % 2 == 0 ? r.betti_x0[i] : -r.betti_x0[i]);
        }
        CHECK(chi_xs == r.euler_xs);
        CHECK(chi_x0 == r.euler_x0);

        // Rank bookkeeping of the two exact sequences.
        CHECK(d.nodes - d.relation_rank == r.betti_x[2] - r.betti_xs[2]);
        CHECK(d.relation_rank == r.betti_xs[3] - r.betti_x0[3]);

        // Reconstructing the resolution from the smooth fiber returns the input.
        CHECK(r.betti_xs[2] + (d.nodes - d.relation_rank) == d.betti_x[2]);
        CHECK(r.betti_xs[3] - 2 * d.relation_rank == d.betti_x[3]);
        CHECK(r.betti_x0[4] == d.betti_x[4]);

        // Duality on the smooth fiber.
        CHECK(r.betti_xs[4] == r.betti_xs[2]);
        for (long b : r.betti_xs) CHECK(b >= 0);
        for (long b : r.betti_x0) CHECK(b >= 0);
    }
}
