#include "degen/matrix.hpp"

#include "degen/errors.hpp"

#include <ostream>
#include <sstream>

namespace degen {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t ambient,
                                      const std::vector<std::vector<GaussianRational>>& cols) {
    ExactMatrix m(ambient, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != ambient)
            throw input_error("from_columns: column length does not match ambient dimension");
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<GaussianRational> ExactMatrix::col(std::size_t j) const {
    std::vector<GaussianRational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<GaussianRational> ExactMatrix::row(std::size_t i) const {
    std::vector<GaussianRational> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::conjugate() const {
    ExactMatrix c = *this;
    for (auto& z : c.a_) z = z.conj();
    return c;
}

ExactMatrix ExactMatrix::conj_transpose() const { return conjugate().transpose(); }

bool ExactMatrix::is_zero() const {
    for (const auto& z : a_)
        if (!z.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_real() const {
    for (const auto& z : a_)
        if (!z.is_real()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& z : m.a_) z = -z;
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix addition: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix subtraction: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product: shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ExactMatrix operator*(const GaussianRational& s, ExactMatrix m) {
    for (auto& z : m.a_) z *= s;
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_) throw input_error("matrix apply: length mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::pow(std::size_t k) const {
    if (rows_ != cols_) throw input_error("matrix power: not square");
    ExactMatrix acc = identity(rows_);
    for (std::size_t s = 0; s < k; ++s) acc = acc * (*this);
    return acc;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) throw input_error("hstack: row mismatch");
    ExactMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
}

std::size_t ExactMatrix::rank() const { return rref().rank; }

RrefResult ExactMatrix::rref() const {
    RrefResult out{*this, {}, 0};
    ExactMatrix& m = out.mat;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
        GaussianRational inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

GaussianRational ExactMatrix::det() const {
    if (rows_ != cols_) throw input_error("determinant: not square");
    ExactMatrix u = *this;
    GaussianRational d(1);
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t p = k;
        while (p < rows_ && u(p, k).is_zero()) ++p;
        if (p == rows_) return GaussianRational(0);
        if (p != k) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(u(p, j), u(k, j));
            d = -d;
        }
        d *= u(k, k);
        GaussianRational inv = u(k, k).inverse();
        for (std::size_t i = k + 1; i < rows_; ++i) {
            if (u(i, k).is_zero()) continue;
            GaussianRational f = u(i, k) * inv;
            for (std::size_t j = k; j < cols_; ++j) u(i, j) -= f * u(k, j);
        }
    }
    return d;
}

ExactMatrix ExactMatrix::null_space() const {
    RrefResult rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::size_t nfree = cols_ - rr.rank;
    ExactMatrix ker(cols_, nfree);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        ker(f, k) = GaussianRational(1);
        for (std::size_t r = 0; r < rr.rank; ++r) ker(rr.pivots[r], k) = -rr.mat(r, f);
        ++k;
    }
    return ker;
}

std::optional<std::vector<GaussianRational>> ExactMatrix::solve(
    const std::vector<GaussianRational>& b) const {
    if (b.size() != rows_) throw input_error("solve: length mismatch");
    ExactMatrix rhs(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) rhs(i, 0) = b[i];
    RrefResult rr = hstack(*this, rhs).rref();
    for (std::size_t r = 0; r < rr.rank; ++r)
        if (rr.pivots[r] == cols_) return std::nullopt; // pivot in the augmented column
    std::vector<GaussianRational> x(cols_);
    for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.mat(r, cols_);
    return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) throw input_error("inverse: not square");
    RrefResult rr = hstack(*this, identity(rows_)).rref();
    if (rr.rank < rows_) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r)
        if (rr.pivots[r] != r) return std::nullopt;
    ExactMatrix inv(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = rr.mat(i, cols_ + j);
    return inv;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.str(); }

} // namespace degen
