#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace degen {

/// Dual graph of the central fiber of a curve degeneration: one vertex per
/// component (weighted by geometric genus), one edge per node. Loops encode
/// self-nodes and contribute 2 to the branch count of their vertex.
struct DualGraph {
    std::vector<int> genus;                      // g_i >= 0, one per vertex
    std::vector<std::pair<int, int>> edges;      // unordered, normalized a <= b

    std::size_t vertex_count() const { return genus.size(); }
    std::size_t edge_count() const { return edges.size(); }

    /// d_i = number of edge endpoints at vertex i (a loop counts twice).
    std::vector<int> branch_degrees() const;
    bool connected() const;
    bool has_loops() const;

    /// Lexicographically least (genus, edges) encoding over all vertex
    /// relabelings; equal keys = isomorphic weighted multigraphs.
    std::vector<int> canonical_key() const;
    /// True when this labeling already realizes the canonical key.
    bool is_canonical_representative() const;

    void normalize_edges();
};

/// Arithmetic genus of the total curve: sum of component genera plus the
/// first Betti number of the graph.
int genus_formula(const DualGraph& graph);

struct StableModel {
    DualGraph graph;
    int generic_genus = 0;

    /// generic_genus agrees with the graph arithmetic genus.
    bool consistent() const;
};

struct StabilityReport {
    bool stable = false;
    std::vector<std::size_t> violating_vertices;
};

/// Deligne-Mumford stability: genus-0 vertices need d_i >= 3, genus-1 need
/// d_i >= 1.
StabilityReport stability_check(const StableModel& model);

/// h^0 of the k-th twisted pluri-canonical sheaf on a stable component of
/// genus g with d node branches: g for k = 1, (2k-1)(g-1) + (k-1)d for k >= 2.
long twisted_plurigenus(int g, int d, int k);

/// Geometric genus of the m-cyclic cover of a smooth genus-g curve:
/// sum of the pluri-genera P_1..P_m, in closed form m^2(g-1) + 1.
long cover_pg_smooth(int g, int m);

struct PluriGenusTable {
    std::vector<std::vector<long>> entries; // entries[i][k-1] = h^0 on vertex i at level k
    std::vector<long> row_sums;             // per vertex
    long grand_total = 0;
};

PluriGenusTable plurigenus_table(const StableModel& model, int m);

/// Total cover genus of the central fiber: sum over components and levels of
/// the twisted pluri-genera.
long cover_pg_central(const StableModel& model, int m);

struct IncompletenessResult {
    bool incomplete = false; // cover genera agree; the puncture is at finite distance
    long residual = 0;       // smooth minus central; m*E - (V-1) for consistent models
    long smooth_total = 0;
    long central_total = 0;
};

/// The m-th cover metric is incomplete iff the cover genus of the smooth
/// fiber equals the cover genus of the central fiber.
IncompletenessResult gm_incompleteness_test(const StableModel& model, int m);

struct ThreeMVerdict {
    bool smoothable = false;
    std::vector<int> failing_ms;              // supplied m with nonzero residual
    std::vector<std::pair<int, long>> residuals;
    // concluded data when smoothable: one component, no nodes, genus matches
    int concluded_components = 0;
    int concluded_edges = 0;
    int concluded_genus = 0;
};

/// Vanishing of the residual at three distinct m forces a single smooth
/// component of full genus. Requires at least 3 distinct positive values.
ThreeMVerdict three_m_criterion(const StableModel& model, std::vector<int> ms);

/// Streams every connected stable multigraph (up to isomorphism) with at
/// most v_max vertices, e_max edges and vertex genus <= g_vertex_max, with
/// generic genus from genus_formula. Deterministic order.
void enumerate_stable_models(int v_max, int e_max, int g_vertex_max,
                             const std::function<void(const StableModel&)>& yield);

} // namespace degen
