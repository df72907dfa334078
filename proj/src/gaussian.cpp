#include "degen/gaussian.hpp"

#include <ostream>

namespace degen {

GaussianRational GaussianRational::inverse() const {
    Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = (abs(im) == Rational(1)) ? "i" : abs(im).str() + "*i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
    return re.str() + (im.sign() < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

GaussianRational i_pow(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

} // namespace degen
