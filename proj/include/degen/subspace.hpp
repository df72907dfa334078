#pragma once

#include "degen/matrix.hpp"

namespace degen {

/// Linear subspace of a fixed-dimension coordinate space, stored through a
/// canonical basis (reduced column echelon form). Two subspaces are equal
/// iff their canonical bases are identical matrices, so filtration
/// comparisons are syntactic.
class Subspace {
public:
    /// The zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim);

    /// Span of the columns of `vectors` (need not be independent).
    static Subspace span(const ExactMatrix& vectors);
    static Subspace span_of(std::size_t ambient, const std::vector<std::vector<GaussianRational>>& cols);
    static Subspace full(std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }

    /// Canonical basis, one column per dimension.
    const ExactMatrix& basis() const { return basis_; }

    bool is_real() const { return basis_.is_real(); }
    Subspace conjugated() const { return span(basis_.conjugate()); }

    bool contains(const std::vector<GaussianRational>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersect(const Subspace& a, const Subspace& b);

    /// Kernel of M as a subspace of its column space.
    static Subspace kernel(const ExactMatrix& m);
    /// M(S), a subspace of the row space of M.
    static Subspace image(const ExactMatrix& m, const Subspace& s);
    /// {x : Mx in S}.
    static Subspace preimage(const ExactMatrix& m, const Subspace& s);

    /// Columns completing a basis of `inner` to one of `outer` (inner must be
    /// contained in outer); drawn from the canonical basis of `outer`, so the
    /// extension of a real subspace by a real subspace is real.
    static ExactMatrix extend_basis(const Subspace& inner, const Subspace& outer);

private:
    std::size_t ambient_;
    ExactMatrix basis_;
};

struct SubspaceAlgebra {
    Subspace sum;
    Subspace intersection;
    bool contains; // B is contained in A
};

/// Sum, intersection and containment of two subspaces of the same ambient space.
SubspaceAlgebra subspace_algebra(const Subspace& a, const Subspace& b);

} // namespace degen
