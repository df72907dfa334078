#include "degen/generators.hpp"

#include "degen/errors.hpp"

#include <algorithm>

namespace degen::gen {

int Rng::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(eng_);
}

Rational Rng::small_rational() {
    int num = uniform(-3, 3);
    int den = uniform(1, 3);
    return Rational(num, den);
}

ExactMatrix random_nilpotent(Rng& rng, std::size_t dim) {
    if (dim == 0) return ExactMatrix(0, 0);
    // Jordan type: random composition of dim.
    std::vector<std::size_t> parts;
    std::size_t left = dim;
    while (left > 0) {
        std::size_t part = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(left)));
        parts.push_back(part);
        left -= part;
    }
    ExactMatrix jordan(dim, dim);
    std::size_t offset = 0;
    for (std::size_t part : parts) {
        for (std::size_t i = 0; i + 1 < part; ++i)
            jordan(offset + i, offset + i + 1) = GaussianRational(1);
        offset += part;
    }
    // Conjugate by a product of integer shears (unimodular, exact inverse).
    ExactMatrix s = ExactMatrix::identity(dim);
    const int shear_count = static_cast<int>(2 * dim);
    for (int t = 0; t < shear_count; ++t) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dim) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dim) - 1));
        if (i == j) continue;
        ExactMatrix shear = ExactMatrix::identity(dim);
        shear(i, j) = GaussianRational(rng.uniform(-2, 2));
        s = s * shear;
    }
    auto s_inv = s.inverse();
    if (!s_inv) throw std::logic_error("random nilpotent: shear product not invertible");
    return s * jordan * *s_inv;
}

ExactMatrix random_isometry(Rng& rng, const ExactMatrix& q, unsigned weight) {
    const std::size_t dim = q.rows();
    const bool symmetric = weight % 2 == 0;
    for (int attempt = 0; attempt < 32; ++attempt) {
        // Random element of the isometry Lie algebra:
        // A = sum c * (u (Qv)^T - (-1)^n v (Qu)^T).
        ExactMatrix a(dim, dim);
        int terms = rng.uniform(1, 3);
        for (int t = 0; t < terms; ++t) {
            std::vector<GaussianRational> u(dim), v(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                u[i] = GaussianRational(rng.uniform(-1, 1));
                v[i] = GaussianRational(rng.uniform(-1, 1));
            }
            GaussianRational c{rng.small_rational()};
            std::vector<GaussianRational> qu = q.apply(u), qv = q.apply(v);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    GaussianRational term = u[i] * qv[j];
                    GaussianRational mirror = v[i] * qu[j];
                    a(i, j) += c * (symmetric ? term - mirror : term + mirror);
                }
        }
        if (!(a.transpose() * q + q * a).is_zero())
            throw std::logic_error("random isometry: Lie algebra construction failed");
        // Cayley transform (I - A)(I + A)^{-1} is a Q-isometry when defined.
        ExactMatrix id = ExactMatrix::identity(dim);
        auto inv = (id + a).inverse();
        if (!inv) continue;
        ExactMatrix s = (id - a) * *inv;
        if (s.transpose() * q * s != q)
            throw std::logic_error("random isometry: Cayley transform is not an isometry");
        return s;
    }
    return ExactMatrix::identity(dim);
}

namespace {

// Model blocks per weight. Columns listed per Hodge step; the frame entry is
// the block's contribution to F^n (absent for the conifold-type block).
struct Block {
    std::size_t dim;
    unsigned level; // contribution to deg p per frame vector (0 for none)
    bool has_frame_vector;
    ExactMatrix q;
    ExactMatrix n;
    // hodge[p-1] = basis columns of F^p within the block, p = 1..weight
    std::vector<std::vector<std::vector<GaussianRational>>> hodge;
    std::vector<GaussianRational> frame_vector;
};

GaussianRational gr(long v) { return GaussianRational(v); }

ExactMatrix mat(std::size_t n, std::initializer_list<long> rows) {
    ExactMatrix m(n, n);
    auto it = rows.begin();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = gr(*it++);
    return m;
}

std::vector<GaussianRational> vec(std::initializer_list<long> re) {
    std::vector<GaussianRational> v;
    for (long x : re) v.push_back(gr(x));
    return v;
}

Block elliptic_block() {
    Block b;
    b.dim = 2;
    b.level = 1;
    b.has_frame_vector = true;
    b.q = mat(2, {0, 1, -1, 0});
    b.n = mat(2, {0, -1, 0, 0}); // N e2 = -e1
    b.frame_vector = vec({0, 1});
    b.hodge = {{b.frame_vector}}; // F^1 = span(e2)
    return b;
}

Block pure_weight1_block() {
    Block b;
    b.dim = 2;
    b.level = 0;
    b.has_frame_vector = true;
    b.q = mat(2, {0, 1, -1, 0});
    b.n = mat(2, {0, 0, 0, 0});
    b.frame_vector = {gr(1), GaussianRational::i()}; // e1 + i e2
    b.hodge = {{b.frame_vector}};
    return b;
}

Block type3_block() { // weight 2, maximal unipotent: Jordan 3-chain
    Block b;
    b.dim = 3;
    b.level = 2;
    b.has_frame_vector = true;
    b.q = mat(3, {0, 0, 1, 0, -1, 0, 1, 0, 0});
    b.n = mat(3, {0, 1, 0, 0, 0, 1, 0, 0, 0}); // c3 -> c2 -> c1
    b.frame_vector = vec({0, 0, 1});
    b.hodge = {
        {vec({0, 1, 0}), vec({0, 0, 1})}, // F^1 = span(c2, c3)
        {vec({0, 0, 1})},                 // F^2 = span(c3)
    };
    return b;
}

Block pure_weight2_block() { // K3-type pure piece: h^{2,0} = h^{1,1} = 1
    Block b;
    b.dim = 3;
    b.level = 0;
    b.has_frame_vector = true;
    b.q = mat(3, {-1, 0, 0, 0, -1, 0, 0, 0, 1});
    b.n = mat(3, {0, 0, 0, 0, 0, 0, 0, 0, 0});
    b.frame_vector = {gr(1), GaussianRational::i(), gr(0)}; // a1 + i a2
    b.hodge = {
        {b.frame_vector, vec({0, 0, 1})}, // F^1
        {b.frame_vector},                 // F^2
    };
    return b;
}

Block conifold_block() { // weight 3, N != 0 with no F^3 contribution
    Block b;
    b.dim = 2;
    b.level = 0;
    b.has_frame_vector = false;
    b.q = mat(2, {0, -1, 1, 0});
    b.n = mat(2, {0, 1, 0, 0}); // N c2 = c1
    b.hodge = {
        {vec({1, 0}), vec({0, 1})}, // F^1 = everything
        {vec({0, 1})},              // F^2 = span(c2)
        {},                         // F^3 = 0
    };
    return b;
}

Block pure_weight3_block() {
    Block b;
    b.dim = 2;
    b.level = 0;
    b.has_frame_vector = true;
    b.q = mat(2, {0, 1, -1, 0});
    b.n = mat(2, {0, 0, 0, 0});
    b.frame_vector = {gr(1), -GaussianRational::i()}; // d1 - i d2
    b.hodge = {
        {b.frame_vector},
        {b.frame_vector},
        {b.frame_vector},
    };
    return b;
}

Block mum_block() { // weight 3, maximal unipotent: Jordan 4-chain
    Block b;
    b.dim = 4;
    b.level = 3;
    b.has_frame_vector = true;
    // Basis w1 = N^3 v, w2 = N^2 v, w3 = N v, w4 = v.
    b.q = mat(4, {0, 0, 0, -1,
                  0, 0, 1, 0,
                  0, -1, 0, 0,
                  1, 0, 0, 0});
    b.n = mat(4, {0, 1, 0, 0,
                  0, 0, 1, 0,
                  0, 0, 0, 1,
                  0, 0, 0, 0});
    b.frame_vector = vec({0, 0, 0, 1});
    b.hodge = {
        {vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}, // F^1
        {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})},                    // F^2
        {vec({0, 0, 0, 1})},                                       // F^3
    };
    return b;
}

Block level1_weight3_block() { // weight 3 with F^3 at level 1
    Block b;
    b.dim = 4;
    b.level = 1;
    b.has_frame_vector = true;
    // w3, w4 at weight 4; N w3 = w1, N w4 = w2.
    b.q = mat(4, {0, 0, 1, 0,
                  0, 0, 0, 1,
                  -1, 0, 0, 0,
                  0, -1, 0, 0});
    b.n = mat(4, {0, 0, 1, 0,
                  0, 0, 0, 1,
                  0, 0, 0, 0,
                  0, 0, 0, 0});
    b.frame_vector = {gr(0), gr(0), gr(1), GaussianRational::i()}; // w3 + i w4
    std::vector<GaussianRational> nu = {gr(1), GaussianRational::i(), gr(0), gr(0)};
    b.hodge = {
        {vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), nu}, // F^1 = span(w3, w4, Nu)
        {b.frame_vector, nu},                       // F^2 = span(u, Nu)
        {b.frame_vector},                           // F^3 = span(u)
    };
    return b;
}

std::vector<Block> palette(unsigned weight) {
    switch (weight) {
        case 1: return {elliptic_block(), pure_weight1_block()};
        case 2: return {type3_block(), pure_weight2_block()};
        default: return {mum_block(), level1_weight3_block(), conifold_block(), pure_weight3_block()};
    }
}

} // namespace

RandomLmhs random_lmhs_fixture(Rng& rng, std::size_t max_dim) {
    const unsigned weight = static_cast<unsigned>(rng.uniform(1, 3));
    std::vector<Block> options = palette(weight);

    std::vector<Block> chosen;
    std::size_t dim = 0;
    bool has_frame = false;
    for (int tries = 0; tries < 12; ++tries) {
        const Block& cand = options[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(options.size()) - 1))];
        if (dim + cand.dim > max_dim) break;
        chosen.push_back(cand);
        dim += cand.dim;
        has_frame = has_frame || cand.has_frame_vector;
        if (dim + 2 > max_dim) break;
        if (rng.uniform(0, 2) == 0 && has_frame) break;
    }
    if (!has_frame) {
        // guarantee p_g >= 1
        Block filler = palette(weight).back(); // pure block of that weight
        if (dim + filler.dim > max_dim) {
            chosen.clear();
            dim = 0;
        }
        chosen.push_back(filler);
        dim += filler.dim;
    }

    // Direct sum.
    ExactMatrix q(dim, dim), n(dim, dim);
    std::vector<std::vector<std::vector<GaussianRational>>> hodge_cols(weight);
    std::vector<std::vector<GaussianRational>> frame;
    unsigned expected_degree = 0;
    std::size_t offset = 0;
    auto embed = [&](const std::vector<GaussianRational>& v, std::size_t at) {
        std::vector<GaussianRational> out(dim);
        for (std::size_t i = 0; i < v.size(); ++i) out[at + i] = v[i];
        return out;
    };
    for (const Block& b : chosen) {
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) {
                q(offset + i, offset + j) = b.q(i, j);
                n(offset + i, offset + j) = b.n(i, j);
            }
        for (unsigned p = 1; p <= weight; ++p)
            for (const auto& col : b.hodge[p - 1]) hodge_cols[p - 1].push_back(embed(col, offset));
        if (b.has_frame_vector) {
            frame.push_back(embed(b.frame_vector, offset));
            expected_degree += b.level;
        }
        offset += b.dim;
    }

    // Random isometry of Q scrambles N, F and the frame but leaves Q fixed.
    ExactMatrix s = random_isometry(rng, q, weight);
    auto s_inv_opt = s.inverse();
    ExactMatrix s_inv = *s_inv_opt;
    n = s_inv * n * s;
    for (auto& step : hodge_cols)
        for (auto& col : step) col = s_inv.apply(col);
    for (auto& col : frame) col = s_inv.apply(col);

    HodgeFiltration f;
    f.ambient = dim;
    f.steps.push_back(Subspace::full(dim));
    for (unsigned p = 1; p <= weight; ++p) f.steps.push_back(Subspace::span_of(dim, hodge_cols[p - 1]));

    PolarizedLattice lattice{dim, weight, q};
    RandomLmhs out;
    out.lmhs = make_lmhs(std::move(lattice), std::move(n), std::move(f));
    out.frame = std::move(frame);
    out.expected_degree = expected_degree;
    out.expected_nf_annihilation = expected_degree == 0;
    return out;
}

SurgeryDatum random_surgery_datum(Rng& rng) {
    long k = rng.uniform(1, 12);
    long rho = rng.uniform(0, static_cast<int>(k));
    long b2 = (k - rho) + rng.uniform(0, 20);
    long b3 = 2L * rng.uniform(0, 150);
    return SurgeryDatum::from_b2_b3(b2, b3, k, rho);
}

} // namespace degen::gen
