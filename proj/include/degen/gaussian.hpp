#pragma once

#include "degen/rational.hpp"

#include <iosfwd>
#include <string>

namespace degen {

/// Gaussian rational: re + im*sqrt(-1) with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re(n) {}                      // NOLINT(google-explicit-constructor)
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, a nonnegative rational, zero iff z = 0.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// "a", "b*i" or "a+b*i" for diagnostics.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);
};

/// i^e with e of either sign.
GaussianRational i_pow(long e);

} // namespace degen
