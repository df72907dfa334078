#include "degen/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace degen {

Polynomial::Polynomial(GaussianRational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(const GaussianRational& coeff, std::size_t power) {
    Polynomial p;
    if (coeff.is_zero()) return p;
    p.c_.assign(power + 1, GaussianRational());
    p.c_[power] = coeff;
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_real() const {
    for (const auto& z : c_)
        if (!z.is_real()) return false;
    return true;
}

GaussianRational Polynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational();
}

GaussianRational Polynomial::leading() const {
    return c_.empty() ? GaussianRational() : c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& z : p.c_) z = -z;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    Polynomial q = p;
    for (auto& z : q.c_) z *= s;
    q.trim();
    return q;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (c_.size() <= 1) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = GaussianRational(Rational(static_cast<long>(k))) * c_[k];
    d.trim();
    return d;
}

GaussianRational Polynomial::eval(const GaussianRational& y) const {
    GaussianRational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * y + c_[k];
    return acc;
}

Polynomial Polynomial::conjugate() const {
    Polynomial p = *this;
    for (auto& z : p.c_) z = z.conj();
    return p;
}

PolyDivMod Polynomial::divide(const Polynomial& den) const {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this, quot;
    GaussianRational lead_inv = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
        GaussianRational f = rem.leading() * lead_inv;
        quot += monomial(f, shift);
        rem -= monomial(f, shift) * den;
    }
    return {quot, rem};
}

Polynomial Polynomial::exact_div(const Polynomial& den) const {
    PolyDivMod dm = divide(den);
    if (!dm.rem.is_zero()) throw std::logic_error("polynomial division expected to be exact");
    return dm.quot;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divide(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a; // monic
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const GaussianRational& z = c_[k];
        if (z.is_zero()) continue;
        std::string cs;
        bool negated = false;
        if (z.is_real()) {
            Rational r = z.re;
            if (!first && r.sign() < 0) {
                negated = true;
                r = -r;
            }
            cs = r.str();
        } else {
            cs = "(" + z.str() + ")";
        }
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace degen
