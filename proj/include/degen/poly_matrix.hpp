#pragma once

#include "degen/matrix.hpp"
#include "degen/polynomial.hpp"

namespace degen {

/// Matrix of univariate polynomials in y. Evaluation at a rational point
/// commutes with all matrix operations.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);
    /// Lift of a scalar matrix to constant polynomials.
    static PolyMatrix constant(const ExactMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    PolyMatrix& operator+=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    ExactMatrix eval(const Rational& y) const;
    PolyMatrix conj_transpose() const;

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination; every interior
/// division is exact in the polynomial ring.
Polynomial poly_det(const PolyMatrix& m);

/// exp(scale * y * N) as a polynomial matrix; N must be nilpotent.
PolyMatrix nilpotent_exp(const ExactMatrix& n, const GaussianRational& scale);

} // namespace degen
