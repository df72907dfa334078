#pragma once

#include "degen/gaussian.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace degen {

struct RrefResult;

/// Dense matrix over the Gaussian rationals with exact arithmetic throughout.
/// Row-major storage; all elimination routines are deterministic (first
/// nonzero pivot in order).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    /// Builds the matrix whose columns are the given vectors (all of length `ambient`).
    static ExactMatrix from_columns(std::size_t ambient,
                                    const std::vector<std::vector<GaussianRational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<GaussianRational> col(std::size_t j) const;
    std::vector<GaussianRational> row(std::size_t i) const;

    ExactMatrix transpose() const;
    ExactMatrix conjugate() const;
    ExactMatrix conj_transpose() const;

    bool is_zero() const;
    bool is_real() const;

    ExactMatrix operator-() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix m);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    ExactMatrix pow(std::size_t k) const;

    /// Horizontal concatenation [A | B].
    static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

    RrefResult rref() const;

    std::size_t rank() const;

    GaussianRational det() const;

    /// Columns span the kernel {x : Ax = 0}; empty matrix (n x 0) when trivial.
    ExactMatrix null_space() const;

    /// One solution of Ax = b, or nullopt when inconsistent.
    std::optional<std::vector<GaussianRational>> solve(const std::vector<GaussianRational>& b) const;

    std::optional<ExactMatrix> inverse() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

/// Reduced row echelon form together with its pivot bookkeeping.
struct RrefResult {
    ExactMatrix mat;
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank = 0;
};

} // namespace degen
