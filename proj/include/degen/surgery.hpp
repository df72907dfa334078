#pragma once

#include "degen/distance.hpp"

#include <array>
#include <vector>

namespace degen {

/// Geometric genus bookkeeping for a semi-stable central fiber: the generic
/// value and the per-component values. The Invariant Cycle Theorem forces
/// pg_generic >= sum(pg_components); violating inputs are rejected.
struct ComponentGenera {
    long pg_generic = 0;
    std::vector<long> pg_components;

    static ComponentGenera make(long generic, std::vector<long> components);
    long component_sum() const;
};

/// Finite distance iff the generic geometric genus survives to the central
/// fiber: pg_generic == sum of component genera.
DistanceClass pg_equality_check(const ComponentGenera& data);

struct CyComponentCheck {
    bool pass = false;               // exactly one component carries h^{n,0} = 1
    bool inconsistent_input = false; // total h^{n,0} exceeds 1, impossible for p_g = 1
};

/// Boundary criterion for Calabi-Yau degenerations: exactly one component
/// with h^{n,0} = 1.
CyComponentCheck cy_component_criterion(const std::vector<long>& h_n0);

/// Input to the nodal surgery arithmetic: Betti numbers b_0..b_6 of a small
/// resolution X of the nodal threefold, the node count k, and the rank rho
/// of the relations among the exceptional curve classes in H_2(X).
struct SurgeryDatum {
    std::array<long, 7> betti_x{};
    long nodes = 0;         // k >= 1
    long relation_rank = 0; // 0 <= rho <= k

    static SurgeryDatum make(std::array<long, 7> betti_x, long nodes, long relation_rank);
    /// Convenience for the common shape [1, 0, b2, b3, b2, 0, 1].
    static SurgeryDatum from_b2_b3(long b2, long b3, long nodes, long relation_rank);

    long euler() const;
};

struct SurgeryReport {
    std::array<long, 7> betti_x{};  // small resolution X
    std::array<long, 7> betti_xs{}; // smooth fiber X_s
    std::array<long, 7> betti_x0{}; // nodal central fiber X_0
    long euler_x = 0;
    long euler_xs = 0;
    long euler_x0 = 0;
    long vanishing_cycle_dim = 0; // rho
    bool monodromy_nontrivial = false;
};

/// Betti numbers of the smooth fiber and the nodal fiber from the small
/// resolution, via the Euler count through the surgery and the
/// Mayer-Vietoris rank identities.
SurgeryReport surgery_report(const SurgeryDatum& datum);

/// A global smoothing of the nodal Calabi-Yau (with h^1(O) = 0) exists only
/// when the exceptional curve classes satisfy a nontrivial relation.
bool friedman_smoothability_flag(const SurgeryDatum& datum);

} // namespace degen
