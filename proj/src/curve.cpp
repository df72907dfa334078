#include "degen/curve.hpp"

#include "degen/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace degen {

std::vector<int> DualGraph::branch_degrees() const {
    std::vector<int> d(genus.size(), 0);
    for (const auto& [a, b] : edges) {
        d.at(a) += 1;
        d.at(b) += 1; // a loop hits the same vertex twice
    }
    return d;
}

bool DualGraph::connected() const {
    if (genus.empty()) return false;
    std::vector<std::size_t> parent(genus.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);
    std::size_t root = find(0);
    for (std::size_t v = 1; v < genus.size(); ++v)
        if (find(v) != root) return false;
    return true;
}

bool DualGraph::has_loops() const {
    for (const auto& [a, b] : edges)
        if (a == b) return true;
    return false;
}

void DualGraph::normalize_edges() {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
}

namespace {

std::vector<int> encode(const DualGraph& g, const std::vector<int>& perm) {
    // perm[old] = new label
    std::vector<int> key;
    key.reserve(g.genus.size() + 2 * g.edges.size());
    std::vector<int> relabeled_genus(g.genus.size());
    for (std::size_t v = 0; v < g.genus.size(); ++v) relabeled_genus[perm[v]] = g.genus[v];
    key.insert(key.end(), relabeled_genus.begin(), relabeled_genus.end());
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        int x = perm[a], y = perm[b];
        es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

} // namespace

std::vector<int> DualGraph::canonical_key() const {
    std::vector<int> perm(genus.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = encode(*this, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> key = encode(*this, perm);
        if (key < best) best = key;
    }
    return best;
}

bool DualGraph::is_canonical_representative() const {
    std::vector<int> identity(genus.size());
    std::iota(identity.begin(), identity.end(), 0);
    return encode(*this, identity) == canonical_key();
}

int genus_formula(const DualGraph& graph) {
    if (!graph.connected()) throw input_error("genus formula: graph is disconnected");
    int total = 0;
    for (int g : graph.genus) total += g;
    return total + static_cast<int>(graph.edge_count()) - static_cast<int>(graph.vertex_count()) + 1;
}

bool StableModel::consistent() const { return generic_genus == genus_formula(graph); }

StabilityReport stability_check(const StableModel& model) {
    StabilityReport rep;
    std::vector<int> d = model.graph.branch_degrees();
    for (std::size_t v = 0; v < model.graph.vertex_count(); ++v) {
        bool ok = (model.graph.genus[v] == 0)   ? d[v] >= 3
                  : (model.graph.genus[v] == 1) ? d[v] >= 1
                                                : true;
        if (!ok) rep.violating_vertices.push_back(v);
    }
    rep.stable = rep.violating_vertices.empty();
    return rep;
}

long twisted_plurigenus(int g, int d, int k) {
    if (k < 1) throw input_error("twisted plurigenus: level must be >= 1");
    if (g < 0 || d < 0) throw input_error("twisted plurigenus: negative vertex data");
    if ((g == 0 && d < 3) || (g == 1 && d < 1))
        throw input_error("twisted plurigenus: vertex data violates stability");
    if (k == 1) return g; // h^1 of the canonical sheaf is 1
    return static_cast<long>(2 * k - 1) * (g - 1) + static_cast<long>(k - 1) * d;
}

long cover_pg_smooth(int g, int m) {
    if (g < 2) throw input_error("cover genus: generic genus must be >= 2");
    if (m < 1) throw input_error("cover genus: m must be >= 1");
    return static_cast<long>(m) * m * (g - 1) + 1;
}

PluriGenusTable plurigenus_table(const StableModel& model, int m) {
    StabilityReport st = stability_check(model);
    if (!st.stable) throw input_error("plurigenus table: model is unstable");
    if (m < 1) throw input_error("plurigenus table: m must be >= 1");
    std::vector<int> d = model.graph.branch_degrees();
    PluriGenusTable table;
    for (std::size_t v = 0; v < model.graph.vertex_count(); ++v) {
        std::vector<long> row;
        long sum = 0;
        for (int k = 1; k <= m; ++k) {
            long h = twisted_plurigenus(model.graph.genus[v], d[v], k);
            row.push_back(h);
            sum += h;
        }
        table.entries.push_back(std::move(row));
        table.row_sums.push_back(sum);
        table.grand_total += sum;
    }
    return table;
}

long cover_pg_central(const StableModel& model, int m) {
    return plurigenus_table(model, m).grand_total;
}

IncompletenessResult gm_incompleteness_test(const StableModel& model, int m) {
    IncompletenessResult res;
    res.smooth_total = cover_pg_smooth(model.generic_genus, m);
    res.central_total = cover_pg_central(model, m);
    res.residual = res.smooth_total - res.central_total;
    res.incomplete = res.residual == 0;
    return res;
}

ThreeMVerdict three_m_criterion(const StableModel& model, std::vector<int> ms) {
    std::set<int> distinct(ms.begin(), ms.end());
    for (int m : distinct)
        if (m < 1) throw input_error("three-m criterion: levels must be positive");
    if (distinct.size() < 3)
        throw input_error("three-m criterion: need at least 3 distinct positive levels");
    ThreeMVerdict verdict;
    for (int m : distinct) {
        IncompletenessResult r = gm_incompleteness_test(model, m);
        verdict.residuals.emplace_back(m, r.residual);
        if (r.residual != 0) verdict.failing_ms.push_back(m);
    }
    verdict.smoothable = verdict.failing_ms.empty();
    if (verdict.smoothable) {
        // The residual is a quadratic in m; three roots force it to vanish
        // identically, which pins the shape of the central fiber.
        verdict.concluded_components = 1;
        verdict.concluded_edges = 0;
        verdict.concluded_genus = model.generic_genus;
    }
    return verdict;
}

void enumerate_stable_models(int v_max, int e_max, int g_vertex_max,
                             const std::function<void(const StableModel&)>& yield) {
    if (v_max < 1 || e_max < 0 || g_vertex_max < 0)
        throw input_error("enumeration: bounds out of range");
    for (int nv = 1; nv <= v_max; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nv; ++a)
            for (int b = a; b < nv; ++b) pairs.emplace_back(a, b);

        std::vector<int> genus(nv, 0);
        for (;;) { // odometer over genus assignments
            std::vector<int> mult(pairs.size(), 0);
            int total_edges = 0;
            for (;;) { // odometer over edge multiplicities with sum <= e_max
                DualGraph graph;
                graph.genus = genus;
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    for (int c = 0; c < mult[p]; ++c) graph.edges.push_back(pairs[p]);
                graph.normalize_edges();
                if (graph.connected()) {
                    StableModel model{graph, 0};
                    if (stability_check(model).stable && graph.is_canonical_representative()) {
                        model.generic_genus = genus_formula(graph);
                        yield(model);
                    }
                }
                // advance multiplicity odometer
                std::size_t p = 0;
                for (; p < mult.size(); ++p) {
                    if (total_edges < e_max) {
                        ++mult[p];
                        ++total_edges;
                        break;
                    }
                    total_edges -= mult[p];
                    mult[p] = 0;
                }
                if (p == mult.size()) break;
            }
            // advance genus odometer
            std::size_t v = 0;
            for (; v < genus.size(); ++v) {
                if (genus[v] < g_vertex_max) {
                    ++genus[v];
                    break;
                }
                genus[v] = 0;
            }
            if (v == genus.size()) break;
        }
    }
}

} // namespace degen
