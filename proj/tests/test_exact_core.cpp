#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/poly_matrix.hpp"
#include "degen/subspace.hpp"
#include "test_helpers.hpp"

using namespace degen;
using namespace degen::test;

TEST_CASE("rationals stay canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-4, -2).str() == "2");
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK(Rational::parse("10/5").str() == "2");
    CHECK(Rational(5).den() == 1);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("abc"), input_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational z = gi(1, 2);
    CHECK(z.conj().conj() == z);
    CHECK(z.norm2() == Rational(5));
    CHECK((z * z.conj()).re == Rational(5));
    CHECK((z * z.inverse()) == g(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == g(-1));
    CHECK(i_pow(5) == GaussianRational::i());
    CHECK(i_pow(-1) == -GaussianRational::i());
    CHECK(i_pow(-2) == g(-1));
    CHECK(gi(0, 0).is_zero());
    CHECK(gi(3, 0).is_real());
    CHECK_FALSE(gi(3, 1).is_real());
    CHECK(gi(1, -1).str() == "1 - i");
}

TEST_CASE("kernel examples") {
    CHECK(Subspace::kernel(mat(2, 2, {0, 0, 0, 0})) == Subspace::full(2));
    CHECK(Subspace::kernel(ExactMatrix::identity(2)) == Subspace::zero(2));
    CHECK(Subspace::kernel(mat(2, 2, {0, 1, 0, 0})) ==
          Subspace::span_of(2, {vec({1, 0})}));
}

TEST_CASE("subspace algebra examples") {
    Subspace e1 = Subspace::span_of(2, {vec({1, 0})});
    Subspace e2 = Subspace::span_of(2, {vec({0, 1})});
    Subspace diag = Subspace::span_of(2, {vec({1, 1})});

    SUBCASE("complementary axes") {
        SubspaceAlgebra r = subspace_algebra(e1, e2);
        CHECK(r.sum.dim() == 2);
        CHECK(r.intersection.dim() == 0);
        CHECK_FALSE(r.contains);
    }
    SUBCASE("diagonal against axis") {
        SubspaceAlgebra r = subspace_algebra(diag, e1);
        CHECK(r.intersection.dim() == 0);
        CHECK(r.sum.dim() == 2);
    }
    SUBCASE("coordinate subspace containment") {
        SubspaceAlgebra r = subspace_algebra(Subspace::full(2), e1);
        CHECK(r.contains);
    }
    SUBCASE("ambient mismatch is an error") {
        CHECK_THROWS_AS(subspace_algebra(e1, Subspace::zero(3)), input_error);
    }
    SUBCASE("dimension formula") {
        SubspaceAlgebra r = subspace_algebra(diag, e2);
        CHECK(r.sum.dim() + r.intersection.dim() == diag.dim() + e2.dim());
    }
}

TEST_CASE("nilpotent_exp examples") {
    SUBCASE("exp of zero is the identity") {
        CHECK(nilpotent_exp(mat(2, 2, {0, 0, 0, 0}), g(1)) == PolyMatrix::identity(2));
    }
    SUBCASE("single 2x2 Jordan block") {
        PolyMatrix e = nilpotent_exp(mat(2, 2, {0, 1, 0, 0}), g(1));
        CHECK(e(0, 0) == Polynomial(1));
        CHECK(e(0, 1) == Polynomial::variable());
        CHECK(e(1, 0) == Polynomial());
        CHECK(e(1, 1) == Polynomial(1));
    }
    SUBCASE("single 3x3 Jordan block has y^2/2 on the second superdiagonal") {
        PolyMatrix e = nilpotent_exp(mat(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0}), g(1));
        CHECK(e(0, 1) == Polynomial::variable());
        CHECK(e(1, 2) == Polynomial::variable());
        CHECK(e(0, 2) == Polynomial::monomial(GaussianRational(Rational(1, 2)), 2));
    }
    SUBCASE("non-nilpotent input is rejected") {
        CHECK_THROWS_AS(nilpotent_exp(ExactMatrix::identity(2), g(1)), input_error);
    }
    SUBCASE("evaluating at y = 0 yields the identity") {
        gen::Rng rng(7);
        ExactMatrix n = gen::random_nilpotent(rng, 5);
        CHECK(nilpotent_exp(n, gi(0, 2)).eval(Rational(0)) == ExactMatrix::identity(5));
    }
}

TEST_CASE("poly_det examples") {
    Polynomial y = Polynomial::variable();
    SUBCASE("unipotent") {
        PolyMatrix m(2, 2);
        m(0, 0) = Polynomial(1);
        m(0, 1) = y;
        m(1, 1) = Polynomial(1);
        CHECK(poly_det(m) == Polynomial(1));
    }
    SUBCASE("diagonal") {
        PolyMatrix m(2, 2);
        m(0, 0) = y;
        m(1, 1) = y;
        CHECK(poly_det(m) == y * y);
    }
    SUBCASE("2x2 cofactor expansion") {
        PolyMatrix m(2, 2);
        m(0, 0) = Polynomial(1);
        m(0, 1) = y;
        m(1, 0) = y;
        m(1, 1) = Polynomial(1);
        CHECK(poly_det(m) == Polynomial(1) - y * y);
    }
    SUBCASE("non-square input is rejected") {
        CHECK_THROWS_AS(poly_det(PolyMatrix(2, 3)), input_error);
    }
    SUBCASE("zero column short-circuits") {
        PolyMatrix m(2, 2);
        m(0, 1) = y;
        m(1, 1) = Polynomial(1);
        CHECK(poly_det(m) == Polynomial());
    }
}

namespace {

ExactMatrix random_matrix(gen::Rng& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = GaussianRational(rng.small_rational(), rng.small_rational());
    return m;
}

} // namespace

TEST_CASE("rank-nullity holds exactly on random matrices") {
    gen::Rng rng(20240808);
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 8));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 8));
        ExactMatrix m = random_matrix(rng, rows, cols);
        CHECK(m.rank() + Subspace::kernel(m).dim() == cols);
    }
}

TEST_CASE("canonicalization is idempotent") {
    gen::Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        std::size_t ambient = static_cast<std::size_t>(rng.uniform(1, 7));
        std::size_t count = static_cast<std::size_t>(rng.uniform(1, 7));
        Subspace s = Subspace::span(random_matrix(rng, ambient, count));
        CHECK(Subspace::span(s.basis()) == s);
    }
}

TEST_CASE("nilpotent_exp of N and -N are inverse as polynomial matrices") {
    gen::Rng rng(99);
    for (int t = 0; t < 12; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
        ExactMatrix n = gen::random_nilpotent(rng, dim);
        PolyMatrix pos = nilpotent_exp(n, g(1));
        PolyMatrix neg = nilpotent_exp(-n, g(1));
        CHECK(pos * neg == PolyMatrix::identity(dim));
    }
}

TEST_CASE("poly_det commutes with evaluation") {
    gen::Rng rng(4242);
    const std::vector<Rational> points{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
    for (int t = 0; t < 10; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                std::vector<GaussianRational> coeffs;
                for (int k = 0; k <= rng.uniform(0, 2); ++k)
                    coeffs.push_back(GaussianRational(rng.small_rational(), rng.small_rational()));
                m(i, j) = Polynomial(coeffs);
            }
        Polynomial d = poly_det(m);
        for (const Rational& y : points)
            CHECK(d.eval(y) == m.eval(y).det());
    }
}

TEST_CASE("determinant degree bound") {
    gen::Rng rng(555);
    for (int t = 0; t < 10; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 4));
        PolyMatrix m(dim, dim);
        int bound = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            int row_max = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                int deg = rng.uniform(0, 3);
                m(i, j) = Polynomial::monomial(GaussianRational(rng.small_rational()),
                                               static_cast<std::size_t>(deg));
                if (!m(i, j).is_zero()) row_max = std::max(row_max, deg);
            }
            bound += row_max;
        }
        CHECK(poly_det(m).degree() <= bound);
    }
}

TEST_CASE("conjugation distributes over matrix operations") {
    gen::Rng rng(321);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        ExactMatrix a = random_matrix(rng, n, n);
        ExactMatrix b = random_matrix(rng, n, n);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK(a.transpose().conjugate() == a.conjugate().transpose());
        CHECK(a.det().conj() == a.conjugate().det());
    }
}

TEST_CASE("solve and inverse agree") {
    gen::Rng rng(777);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        ExactMatrix a = random_matrix(rng, n, n);
        auto inv = a.inverse();
        if (!inv) continue;
        CHECK(*inv * a == ExactMatrix::identity(n));
        std::vector<GaussianRational> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(GaussianRational(rng.small_rational()));
        auto x = a.solve(b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("polynomial division and gcd") {
    Polynomial y = Polynomial::variable();
    Polynomial p = (y + Polynomial(1)) * (y - Polynomial(2));
    CHECK(p.exact_div(y + Polynomial(1)) == y - Polynomial(2));
    CHECK_THROWS_AS((y * y + Polynomial(1)).exact_div(y + Polynomial(1)), std::logic_error);
    Polynomial common = Polynomial::gcd(p, (y + Polynomial(1)) * y);
    CHECK(common == y + Polynomial(1));
    CHECK(Polynomial::gcd(Polynomial(4), y).degree() == 0);
}
