#include "degen/rational.hpp"

#include "degen/errors.hpp"

#include <ostream>

namespace degen {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
    try {
        mpq_class q(text);
        if (q.get_den() == 0) throw input_error("Rational: zero denominator in '" + text + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("Rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) {
    Rational a;
    a.v_ = abs(r.v_);
    return a;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

} // namespace degen
