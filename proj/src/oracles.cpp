#include "degen/oracles.hpp"

#include "degen/errors.hpp"

namespace degen::oracles {

std::vector<Subspace> jordan_filtration_centered(const ExactMatrix& n) {
    if (n.rows() != n.cols()) throw input_error("Jordan filtration: not square");
    const std::size_t dim = n.rows();
    const long ldim = static_cast<long>(dim);

    // Kernels of the powers, K_s = ker N^s, up to the first full one.
    std::vector<Subspace> kernels{Subspace::zero(dim)};
    {
        ExactMatrix power = ExactMatrix::identity(dim);
        while (kernels.back().dim() < dim) {
            power = power * n;
            kernels.push_back(Subspace::kernel(power));
            if (kernels.size() > dim + 1)
                throw input_error("Jordan filtration: operator is not nilpotent");
        }
    }
    const std::size_t smax = kernels.size() - 1; // longest chain length

    struct Chain {
        std::size_t height; // length
        std::vector<std::vector<GaussianRational>> vectors; // v, Nv, N^2 v, ...
    };
    std::vector<Chain> chains;

    for (std::size_t s = smax; s >= 1; --s) {
        // Height-s members of the longer chains push down into K_s.
        Subspace cur = kernels[s - 1];
        for (const auto& ch : chains)
            cur = Subspace::sum(
                cur, Subspace::span_of(dim, {ch.vectors[ch.height - s]}));
        // New chains start at any direction of K_s not yet covered.
        for (std::size_t j = 0; j < kernels[s].dim(); ++j) {
            std::vector<GaussianRational> v = kernels[s].basis().col(j);
            if (cur.contains(v)) continue;
            cur = Subspace::sum(cur, Subspace::span_of(dim, {v}));
            Chain ch;
            ch.height = s;
            ch.vectors.push_back(v);
            for (std::size_t t = 1; t < s; ++t) ch.vectors.push_back(n.apply(ch.vectors.back()));
            chains.push_back(std::move(ch));
        }
        if (s == 1) break;
    }

    std::size_t total = 0;
    for (const auto& ch : chains) total += ch.vectors.size();
    if (total != dim) throw std::logic_error("Jordan filtration: chain vectors do not fill the space");

    std::vector<Subspace> out;
    out.reserve(2 * dim + 1);
    for (long k = -ldim; k <= ldim; ++k) {
        std::vector<std::vector<GaussianRational>> gens;
        for (const auto& ch : chains) {
            long top_weight = static_cast<long>(ch.height) - 1;
            for (std::size_t j = 0; j < ch.vectors.size(); ++j)
                if (top_weight - 2 * static_cast<long>(j) <= k) gens.push_back(ch.vectors[j]);
        }
        out.push_back(Subspace::span_of(dim, gens));
    }
    return out;
}

WeightFiltration weight_filtration_jordan(const NilpotentEndo& endo) {
    const unsigned n = endo.lattice.weight;
    if (endo.nilpotency_index > n)
        throw input_error("weight filtration: nilpotency index exceeds the weight");
    std::vector<Subspace> centered = jordan_filtration_centered(endo.op);
    const long dim = static_cast<long>(endo.lattice.dim);
    WeightFiltration w;
    w.center = n;
    for (long k = 0; k <= 2 * static_cast<long>(n); ++k) {
        long j = k - static_cast<long>(n);
        if (j < -dim)
            w.steps.push_back(Subspace::zero(endo.lattice.dim));
        else if (j > dim)
            w.steps.push_back(Subspace::full(endo.lattice.dim));
        else
            w.steps.push_back(centered[static_cast<std::size_t>(j + dim)]);
    }
    return w;
}

long cover_pg_smooth_term_sum(int g, int m) {
    if (g < 2 || m < 1) throw input_error("cover genus oracle: need g >= 2, m >= 1");
    long total = g;
    for (int k = 2; k <= m; ++k) total += static_cast<long>(k) * (2 * g - 2) + (1 - g);
    return total;
}

long cover_pg_central_term_sum(const StableModel& model, int m) {
    std::vector<int> d = model.graph.branch_degrees();
    long total = 0;
    for (std::size_t v = 0; v < model.graph.vertex_count(); ++v) {
        int g = model.graph.genus[v];
        total += g;
        for (int k = 2; k <= m; ++k)
            total += static_cast<long>(k) * (2 * g - 2) + static_cast<long>(k - 1) * d[v] + (1 - g);
    }
    return total;
}

} // namespace degen::oracles
