#pragma once

#include "degen/gaussian.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace degen {

struct PolyDivMod;

/// Univariate polynomial in y with Gaussian-rational coefficients, stored
/// densely with no trailing zero coefficients. The zero polynomial has
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(GaussianRational constant); // NOLINT(google-explicit-constructor)
    Polynomial(Rational constant) : Polynomial(GaussianRational(std::move(constant))) {}
    Polynomial(long constant) : Polynomial(GaussianRational(constant)) {}
    explicit Polynomial(std::vector<GaussianRational> ascending_coeffs);

    static Polynomial monomial(const GaussianRational& coeff, std::size_t power);
    static Polynomial variable() { return monomial(GaussianRational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_real() const;

    GaussianRational coeff(std::size_t k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const;
    GaussianRational eval(const GaussianRational& y) const;
    GaussianRational eval(const Rational& y) const { return eval(GaussianRational(y)); }

    /// Coefficient-wise conjugate; equals the conjugate of p(y) for real y.
    Polynomial conjugate() const;

    PolyDivMod divide(const Polynomial& den) const;
    /// Division known to be remainder-free; throws std::logic_error otherwise.
    Polynomial exact_div(const Polynomial& den) const;

    /// Monic gcd (1 for coprime inputs, 0 only when both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string str(const std::string& var = "y") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<GaussianRational> c_; // c_[k] multiplies y^k
};

struct PolyDivMod {
    Polynomial quot;
    Polynomial rem;
};

} // namespace degen
