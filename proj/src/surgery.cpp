#include "degen/surgery.hpp"

#include "degen/errors.hpp"

namespace degen {

ComponentGenera ComponentGenera::make(long generic, std::vector<long> components) {
    if (generic < 0) throw input_error("component genera: negative generic genus");
    long sum = 0;
    for (long c : components) {
        if (c < 0) throw input_error("component genera: negative component genus");
        sum += c;
    }
    if (sum > generic)
        throw input_error("component genera: component sum exceeds the generic genus, "
                          "violating the Invariant Cycle bound");
    return {generic, std::move(components)};
}

long ComponentGenera::component_sum() const {
    long sum = 0;
    for (long c : pg_components) sum += c;
    return sum;
}

DistanceClass pg_equality_check(const ComponentGenera& data) {
    return data.component_sum() == data.pg_generic ? DistanceClass::FiniteDistance
                                                   : DistanceClass::InfiniteDistance;
}

CyComponentCheck cy_component_criterion(const std::vector<long>& h_n0) {
    CyComponentCheck res;
    long nonzero = 0, total = 0;
    for (long h : h_n0) {
        if (h < 0) throw input_error("component criterion: negative h^{n,0}");
        if (h > 0) ++nonzero;
        total += h;
    }
    res.pass = (nonzero == 1 && total == 1);
    res.inconsistent_input = total > 1; // p_g(X_s) = 1 bounds the invariant part
    return res;
}

SurgeryDatum SurgeryDatum::make(std::array<long, 7> betti_x, long nodes, long relation_rank) {
    if (betti_x[0] != 1 || betti_x[6] != 1)
        throw input_error("surgery datum: b_0 = b_6 = 1 required");
    if (betti_x[1] != 0 || betti_x[5] != 0)
        throw input_error("surgery datum: b_1 = b_5 = 0 required (h^1(O) = 0)");
    if (betti_x[4] != betti_x[2])
        throw input_error("surgery datum: b_4 = b_2 required (Poincare duality on X)");
    for (long b : betti_x)
        if (b < 0) throw input_error("surgery datum: negative Betti number");
    if (nodes < 1) throw input_error("surgery datum: node count must be >= 1");
    if (relation_rank < 0 || relation_rank > nodes)
        throw input_error("surgery datum: relation rank must satisfy 0 <= rho <= k");
    if (betti_x[2] < nodes - relation_rank)
        throw input_error("surgery datum: b_2(X) < k - rho leaves the smooth fiber with "
                          "negative b_2");
    return {betti_x, nodes, relation_rank};
}

SurgeryDatum SurgeryDatum::from_b2_b3(long b2, long b3, long nodes, long relation_rank) {
    return make({1, 0, b2, b3, b2, 0, 1}, nodes, relation_rank);
}

long SurgeryDatum::euler() const {
    long chi = 0;
    for (int i = 0; i < 7; ++i) chi += (i % 2 == 0 ? betti_x[i] : -betti_x[i]);
    return chi;
}

SurgeryReport surgery_report(const SurgeryDatum& datum) {
    const long k = datum.nodes;
    const long rho = datum.relation_rank;
    SurgeryReport rep;
    rep.betti_x = datum.betti_x;
    rep.euler_x = datum.euler();

    // Replacing k exceptional P^1's by k vanishing S^3's drops the Euler
    // number by 2 per node; contracting them to points drops it by 1.
    rep.euler_xs = rep.euler_x - 2 * k;
    rep.euler_x0 = rep.euler_x - k;

    long b2s = datum.betti_x[2] - (k - rho);
    long b3s = datum.betti_x[3] + 2 * rho;
    rep.betti_xs = {1, 0, b2s, b3s, b2s, 0, 1};
    long chi_check = 2 + 2 * b2s - b3s;
    if (chi_check != rep.euler_xs)
        throw math_failure("surgery arithmetic: Euler count of the smooth fiber is inconsistent");

    long b3_0 = b3s - rho;
    rep.betti_x0 = {1, 0, b2s, b3_0, datum.betti_x[4], 0, 1};
    long chi0 = 0;
    for (int i = 0; i < 7; ++i) chi0 += (i % 2 == 0 ? rep.betti_x0[i] : -rep.betti_x0[i]);
    if (chi0 != rep.euler_x0)
        throw math_failure("surgery arithmetic: Euler count of the central fiber is inconsistent");

    for (long b : rep.betti_xs)
        if (b < 0) throw input_error("surgery datum: derived Betti number of X_s is negative");
    for (long b : rep.betti_x0)
        if (b < 0) throw input_error("surgery datum: derived Betti number of X_0 is negative");

    rep.vanishing_cycle_dim = rho;
    rep.monodromy_nontrivial = rho > 0;
    return rep;
}

bool friedman_smoothability_flag(const SurgeryDatum& datum) { return datum.relation_rank > 0; }

} // namespace degen
