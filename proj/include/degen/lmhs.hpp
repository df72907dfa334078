#pragma once

#include "degen/matrix.hpp"
#include "degen/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degen {

/// Rational vector space with the topological cup-product pairing of weight n:
/// Q is nondegenerate, real-rational, and Q^T = (-1)^n Q.
struct PolarizedLattice {
    std::size_t dim = 0;
    unsigned weight = 0;   // n
    ExactMatrix form;      // Gram matrix of Q

    /// Throws input_error when a structural invariant fails.
    void validate_structural() const;

    /// Q(u, v) = u^T Q v (bilinear; complex arguments allowed).
    GaussianRational pairing(const std::vector<GaussianRational>& u,
                             const std::vector<GaussianRational>& v) const;
};

/// Nilpotent infinitesimal isometry of the lattice (the logarithm of a
/// unipotent monodromy operator).
struct NilpotentEndo {
    PolarizedLattice lattice;
    ExactMatrix op;                 // N
    unsigned nilpotency_index = 0;  // smallest k with N^{k+1} = 0

    /// Validates realness, nilpotency and Q(Nu,v) + Q(u,Nv) = 0, and computes
    /// the nilpotency index. Throws input_error on failure.
    static NilpotentEndo make(PolarizedLattice lattice, ExactMatrix n);
};

/// Increasing filtration W_0 <= ... <= W_{2n} centered at n.
struct WeightFiltration {
    unsigned center = 0;          // n
    std::vector<Subspace> steps;  // steps[k] = W_k for k = 0..2n

    /// W_k with the natural clamping: zero below 0, everything above 2n.
    Subspace step(long k) const;
    std::size_t ambient() const;
    long graded_dim(long k) const {
        return static_cast<long>(step(k).dim()) - static_cast<long>(step(k - 1).dim());
    }

    friend bool operator==(const WeightFiltration& a, const WeightFiltration& b) {
        return a.center == b.center && a.steps == b.steps;
    }
};

/// Decreasing filtration F^0 >= F^1 >= ... >= F^n.
struct HodgeFiltration {
    std::size_t ambient = 0;
    std::vector<Subspace> steps;  // steps[p] = F^p for p = 0..n

    /// F^p clamped: full space for p <= 0, zero above n.
    Subspace step(long p) const;
    unsigned top_index() const { return static_cast<unsigned>(steps.size()) - 1; }
};

/// The bundle (V, n, Q, N, W, F). W is constructed from N unless supplied,
/// in which case it is validated, never trusted.
struct LimitingMixedHodge {
    NilpotentEndo endo;
    WeightFiltration W;
    HodgeFiltration F;
    bool w_supplied = false;

    const PolarizedLattice& lattice() const { return endo.lattice; }
    std::size_t dim() const { return endo.lattice.dim; }
    unsigned weight() const { return endo.lattice.weight; }
};

/// Assembles an LMHS; constructs W from N when none is supplied.
LimitingMixedHodge make_lmhs(PolarizedLattice lattice, ExactMatrix n, HodgeFiltration f,
                             std::optional<WeightFiltration> supplied_w = std::nullopt);

/// Monodromy weight filtration of a nilpotent operator, centered at 0.
/// Entry j + dim holds M_j for j = -dim..dim. Built by the standard
/// induction: with m the nilpotency index, M_m = V, M_{m-1} = ker N^m,
/// M_{-m} = im N^m, and the middle steps are pulled back from the quotient
/// ker N^m / im N^m.
std::vector<Subspace> monodromy_filtration_centered(const ExactMatrix& n);

/// The unique weight filtration of the endomorphism, centered at the lattice
/// weight. Requires nilpotency index <= weight.
WeightFiltration weight_filtration(const NilpotentEndo& endo);

struct GradedIsoEntry {
    unsigned level = 0;       // l
    bool well_defined = false; // N^l maps W_{n+l} into W_{n-l} and W_{n+l-1} into W_{n-l-1}
    bool dims_match = false;
    bool injective = false;
    bool surjective = false;
    bool pass() const { return well_defined && dims_match && injective && surjective; }
};

struct GradedIsoReport {
    std::vector<GradedIsoEntry> entries; // l = 0..n
    bool all_pass() const;
};

/// Checks that N^l induces bijections Gr_{n+l} -> Gr_{n-l} for every l.
/// All-true iff the candidate is THE weight filtration.
/// Throws input_error when the candidate is not increasing.
GradedIsoReport check_graded_isomorphisms(const NilpotentEndo& endo, const WeightFiltration& w);

/// Coordinates on a graded piece Gr_k = W_k / W_{k-1} through real
/// representative vectors, so entrywise conjugation descends.
class GradedChart {
public:
    GradedChart(const Subspace& below, const Subspace& at);

    std::size_t dim() const { return lift_.cols(); }
    std::size_t ambient() const { return lift_.rows(); }
    /// Representative basis vectors (columns), real whenever W is real.
    const ExactMatrix& lift() const { return lift_; }

    /// Chart coordinates of the class of v (v must lie in W_k).
    std::vector<GaussianRational> project(const std::vector<GaussianRational>& v) const;
    /// (S \cap W_k + W_{k-1}) / W_{k-1} in chart coordinates.
    Subspace project_subspace(const Subspace& s) const;

    /// Matrix of the map Gr(src) -> Gr(dst) induced by M.
    static ExactMatrix induced_map(const ExactMatrix& m, const GradedChart& src, const GradedChart& dst);

private:
    Subspace below_;
    Subspace at_;
    ExactMatrix lift_;        // extension columns
    ExactMatrix solve_basis_; // [basis(below) | lift]
};

/// True iff F induces a pure Hodge structure of weight k on Gr_k:
/// F^p Gr (+) conj(F^{k-p+1} Gr) = Gr_k for every p.
bool induced_pure_check(const LimitingMixedHodge& lmhs, unsigned k);

/// True iff N F^p <= F^{p-1} for all p >= 1 and N W_k <= W_{k-2} for all k.
bool check_N_type(const LimitingMixedHodge& lmhs);

struct PolarizationCheck {
    bool upstream_pure = false;   // induced HS on Gr_{n+l} is pure
    bool first_relation = false;  // Q_l(F^p, F^{n+l-p+1}) = 0 on Gr_{n+l}
    bool positivity = false;      // i^{p-q} Q_l(u, conj u) > 0 on primitive (p,q) classes
    std::string witness;
    bool pass() const { return upstream_pure && first_relation && positivity; }
};

/// Hodge-Riemann package for the primitive part of Gr_{n+l} with the form
/// Q_l(u, v) = Q(u, N^l v). Positivity is decided exactly through leading
/// principal minors of the Hermitian Gram matrix.
PolarizationCheck primitive_polarization_check(const LimitingMixedHodge& lmhs, unsigned ell);

struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::string witness; // empty when passing or no witness applies
};

struct ValidationReport {
    std::vector<AxiomCheck> axioms;
    bool all_pass() const;
    const AxiomCheck* find(const std::string& name) const;
};

/// Runs every axiom of a polarized limiting mixed Hodge structure and
/// reports pass/fail per axiom; failures are report entries, never errors.
ValidationReport validate_lmhs(const LimitingMixedHodge& lmhs);

} // namespace degen
