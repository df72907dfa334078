#pragma once

#include "degen/distance.hpp"
#include "degen/lmhs.hpp"
#include "degen/poly_matrix.hpp"

#include <string>
#include <vector>

namespace degen {

/// A limiting mixed Hodge structure together with a basis of its top Hodge
/// piece F^n (the constant terms of a holomorphic frame of the Hodge bundle).
struct PeriodFrame {
    LimitingMixedHodge lmhs;
    std::vector<std::vector<GaussianRational>> vectors;

    /// Validates that the vectors are independent and span F^n.
    static PeriodFrame make(LimitingMixedHodge lmhs,
                            std::vector<std::vector<GaussianRational>> vectors);
    /// Uses the canonical basis of F^n as the frame.
    static PeriodFrame from_lmhs(LimitingMixedHodge lmhs);

    std::size_t genus() const { return vectors.size(); } // p_g = dim F^n
};

/// Gram matrix M(y) with M_ij = i^n Q(exp(2iyN) a_i, conj a_j); Hermitian at
/// every real y. Its determinant is the Hodge-norm polynomial p(y).
PolyMatrix hodge_norm_matrix(const PeriodFrame& frame);

/// True iff N annihilates every frame vector, i.e. N F^n = 0.
bool nf_annihilation(const PeriodFrame& frame);

struct AsymptoticProfile {
    Polynomial p;                  // real coefficients, positive leading coefficient
    int degree = 0;                // d
    DistanceClass classification = DistanceClass::FiniteDistance; // finite iff d = 0
    std::string poincare_coefficient; // "sqrt(d)/2", the length growth factor
};

/// det of the Hodge-norm matrix with the boundary classification; the degree
/// criterion (d = 0) is cross-checked against nf_annihilation and any
/// disagreement is a hard failure.
AsymptoticProfile asymptotic_profile(const PeriodFrame& frame);

/// Predicted degree from the weight filtration: each frame block of size q_k
/// living at level l_(k) (deepest W_{n+l} step containing a representative)
/// contributes q_k * l_(k).
unsigned adapted_degree(const PeriodFrame& frame);

/// Quotient of real polynomials, reduced (gcd 1) with monic denominator.
struct RationalFunction {
    Polynomial num;
    Polynomial den;

    static RationalFunction make(const Polynomial& num, const Polynomial& den);
    Rational eval(const Rational& y) const; // throws on a pole
    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    std::string str() const;
};

/// Metric density G(y) = (p'^2 - p p'') / (4 p^2) along the vertical ray.
RationalFunction metric_density(const Polynomial& p);

struct PathLength {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Length of the vertical segment [y0, Y] under G |dy|^2: integral of
/// sqrt(G). The integrand is evaluated in exact rational arithmetic and
/// integrated by deterministic adaptive quadrature; requires p > 0 on
/// [y0, Y], decided exactly (Sturm count).
PathLength vertical_path_length(const Polynomial& p, const Rational& y0, const Rational& big_y);

struct PoincareComparison {
    unsigned degree = 0;   // d
    Rational limit;        // lim y^2 G(y) = d/4
    std::string statement; // human-readable scaling statement
};

/// The exact Poincare scaling limit y^2 G(y) -> d/4; requires d >= 1.
PoincareComparison poincare_comparison(const AsymptoticProfile& profile);

} // namespace degen
