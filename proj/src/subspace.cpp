#include "degen/subspace.hpp"

#include "degen/errors.hpp"

namespace degen {

namespace {

// Canonical column-span basis: reduce the transpose to reduced row echelon
// form; the nonzero rows, transposed back, are the canonical columns.
ExactMatrix canonical_column_basis(const ExactMatrix& vectors) {
    RrefResult rr = vectors.transpose().rref();
    ExactMatrix basis(vectors.rows(), rr.rank);
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t i = 0; i < vectors.rows(); ++i) basis(i, r) = rr.mat(r, i);
    return basis;
}

} // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::span(const ExactMatrix& vectors) {
    Subspace s(vectors.rows());
    s.basis_ = canonical_column_basis(vectors);
    return s;
}

Subspace Subspace::span_of(std::size_t ambient,
                           const std::vector<std::vector<GaussianRational>>& cols) {
    return span(ExactMatrix::from_columns(ambient, cols));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(ExactMatrix::identity(ambient_dim)); }

bool Subspace::contains(const std::vector<GaussianRational>& v) const {
    if (v.size() != ambient_) throw input_error("subspace membership: ambient mismatch");
    return basis_.solve(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("subspace containment: ambient mismatch");
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw input_error("subspace sum: ambient mismatch");
    return span(ExactMatrix::hstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw input_error("subspace intersection: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    // Kernel of [A | B] consists of pairs (x, y) with Ax = -By; the vectors
    // Ax then run through the intersection.
    ExactMatrix ker = ExactMatrix::hstack(a.basis_, b.basis_).null_space();
    ExactMatrix gens(a.ambient_, ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        for (std::size_t i = 0; i < a.ambient_; ++i) {
            GaussianRational acc;
            for (std::size_t t = 0; t < a.dim(); ++t) acc += a.basis_(i, t) * ker(t, j);
            gens(i, j) = acc;
        }
    }
    return span(gens);
}

Subspace Subspace::kernel(const ExactMatrix& m) { return span(m.null_space()); }

Subspace Subspace::image(const ExactMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw input_error("subspace image: shape mismatch");
    return span(m * s.basis_);
}

Subspace Subspace::preimage(const ExactMatrix& m, const Subspace& s) {
    if (m.rows() != s.ambient()) throw input_error("subspace preimage: shape mismatch");
    if (s.dim() == s.ambient()) return full(m.cols());
    // Kernel of [M | -B]: pairs (x, c) with Mx = Bc, i.e. Mx in S.
    ExactMatrix ker = ExactMatrix::hstack(m, -s.basis_).null_space();
    ExactMatrix gens(m.cols(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) gens(i, j) = ker(i, j);
    return span(gens);
}

ExactMatrix Subspace::extend_basis(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient() != outer.ambient()) throw input_error("extend_basis: ambient mismatch");
    if (!outer.contains(inner)) throw input_error("extend_basis: inner not contained in outer");
    ExactMatrix ext(inner.ambient(), 0);
    Subspace cur = inner;
    for (std::size_t j = 0; j < outer.dim(); ++j) {
        std::vector<GaussianRational> v = outer.basis_.col(j);
        if (cur.contains(v)) continue;
        ExactMatrix one = ExactMatrix::from_columns(inner.ambient(), {v});
        ext = ExactMatrix::hstack(ext, one);
        cur = sum(cur, span(one));
    }
    return ext;
}

SubspaceAlgebra subspace_algebra(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw input_error("subspace algebra: ambient mismatch");
    return {Subspace::sum(a, b), Subspace::intersect(a, b), a.contains(b)};
}

} // namespace degen
