#include "degen/poly_matrix.hpp"

#include "degen/errors.hpp"

namespace degen {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(1);
    return m;
}

PolyMatrix PolyMatrix::constant(const ExactMatrix& src) {
    PolyMatrix m(src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) m(i, j) = Polynomial(src(i, j));
    return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("poly matrix addition: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("poly matrix product: shape mismatch");
    PolyMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

ExactMatrix PolyMatrix::eval(const Rational& y) const {
    ExactMatrix m(rows_, cols_);
    GaussianRational point{y};
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
    return m;
}

PolyMatrix PolyMatrix::conj_transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conjugate();
    return t;
}

Polynomial poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("poly_det: not square");
    std::size_t n = m.rows();
    if (n == 0) return Polynomial(1);
    PolyMatrix b = m;
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && b(r, k).is_zero()) ++r;
            if (r == n) return Polynomial();
            for (std::size_t j = 0; j < n; ++j) std::swap(b(k, j), b(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                b(i, j) = (b(k, k) * b(i, j) - b(i, k) * b(k, j)).exact_div(prev);
        prev = b(k, k);
    }
    Polynomial d = b(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

PolyMatrix nilpotent_exp(const ExactMatrix& n, const GaussianRational& scale) {
    if (n.rows() != n.cols()) throw input_error("nilpotent_exp: not square");
    std::size_t dim = n.rows();
    if (!n.pow(dim).is_zero()) throw input_error("nilpotent_exp: matrix is not nilpotent");
    PolyMatrix out = PolyMatrix::identity(dim);
    ExactMatrix power = ExactMatrix::identity(dim);
    GaussianRational factor(1); // scale^k / k!
    for (std::size_t k = 1; k <= dim; ++k) {
        power = power * n;
        if (power.is_zero()) break;
        factor *= scale;
        factor *= GaussianRational(Rational(1, static_cast<long>(k)));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!power(i, j).is_zero())
                    out(i, j) += Polynomial::monomial(factor * power(i, j), k);
    }
    return out;
}

} // namespace degen
