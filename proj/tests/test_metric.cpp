#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/metric.hpp"
#include "test_helpers.hpp"

#include <cmath>

using namespace degen;
using namespace degen::test;

namespace {

PeriodFrame elliptic_frame() { return PeriodFrame::from_lmhs(elliptic_lmhs()); }

// Trivial weight-0 structure with an orthonormal real frame.
PeriodFrame orthonormal_frame() {
    PolarizedLattice lattice{2, 0, ExactMatrix::identity(2)};
    HodgeFiltration f;
    f.ambient = 2;
    f.steps = {Subspace::full(2)};
    return PeriodFrame::from_lmhs(make_lmhs(lattice, ExactMatrix(2, 2), f));
}

// Weight 3: one vanishing-cycle block (N c2 = c1) plus the volume class
// u = d1 - i d2 with N u = 0. Finite distance with nontrivial monodromy.
PeriodFrame conifold_frame() {
    ExactMatrix q = mat(4, 4,
                        {0, -1, 0, 0,
                         1, 0, 0, 0,
                         0, 0, 0, 1,
                         0, 0, -1, 0});
    ExactMatrix n = mat(4, 4,
                        {0, 1, 0, 0,
                         0, 0, 0, 0,
                         0, 0, 0, 0,
                         0, 0, 0, 0});
    std::vector<GaussianRational> u{g(0), g(0), g(1), gi(0, -1)};
    HodgeFiltration f;
    f.ambient = 4;
    f.steps = {Subspace::full(4),
               Subspace::span_of(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), u}),
               Subspace::span_of(4, {vec({0, 1, 0, 0}), u}),
               Subspace::span_of(4, {u})};
    return PeriodFrame::make(make_lmhs(PolarizedLattice{4, 3, q}, n, f), {u});
}

Polynomial y_power(long coeff, std::size_t k) {
    return Polynomial::monomial(GaussianRational(Rational(coeff)), k);
}

} // namespace

TEST_CASE("frame validation") {
    LimitingMixedHodge lmhs = elliptic_lmhs();
    CHECK_THROWS_AS(PeriodFrame::make(lmhs, {vec({1, 0})}), input_error);      // spans the wrong line
    CHECK_THROWS_AS(PeriodFrame::make(lmhs, {vec({0, 1}), vec({0, 2})}), input_error); // dependent
    CHECK(PeriodFrame::make(lmhs, {vec({0, 2})}).genus() == 1); // rescaled basis is fine
}

TEST_CASE("hodge_norm_matrix examples") {
    SUBCASE("no monodromy, orthonormal frame") {
        CHECK(hodge_norm_matrix(orthonormal_frame()) == PolyMatrix::identity(2));
    }
    SUBCASE("elliptic fixture gives [2y]") {
        PolyMatrix m = hodge_norm_matrix(elliptic_frame());
        REQUIRE(m.rows() == 1);
        CHECK(m(0, 0) == y_power(2, 1));
    }
    SUBCASE("two blocks pair diagonally") {
        PolyMatrix m = hodge_norm_matrix(PeriodFrame::from_lmhs(two_block_lmhs()));
        REQUIRE(m.rows() == 2);
        CHECK(m(0, 0) == y_power(2, 1));
        CHECK(m(1, 1) == y_power(2, 1));
        CHECK(m(0, 1) == Polynomial());
        CHECK(m(1, 0) == Polynomial());
    }
}

TEST_CASE("asymptotic profiles") {
    SUBCASE("pure structure is at finite distance") {
        AsymptoticProfile p = asymptotic_profile(PeriodFrame::from_lmhs(pure_weight1_lmhs()));
        CHECK(p.degree == 0);
        CHECK(p.classification == DistanceClass::FiniteDistance);
        CHECK(p.p == Polynomial(2));
    }
    SUBCASE("elliptic fixture: p = 2y, infinite distance") {
        AsymptoticProfile p = asymptotic_profile(elliptic_frame());
        CHECK(p.p == y_power(2, 1));
        CHECK(p.degree == 1);
        CHECK(p.classification == DistanceClass::InfiniteDistance);
        CHECK(p.poincare_coefficient == "sqrt(1)/2");
    }
    SUBCASE("two elliptic blocks: p = 4y^2") {
        AsymptoticProfile p = asymptotic_profile(PeriodFrame::from_lmhs(two_block_lmhs()));
        CHECK(p.p == y_power(4, 2));
        CHECK(p.degree == 2);
    }
}

TEST_CASE("nf_annihilation") {
    SUBCASE("zero monodromy") {
        CHECK(nf_annihilation(PeriodFrame::from_lmhs(pure_weight1_lmhs())));
    }
    SUBCASE("elliptic fixture moves the frame") {
        CHECK_FALSE(nf_annihilation(elliptic_frame()));
    }
    SUBCASE("nonzero N supported off F^n") {
        PeriodFrame frame = conifold_frame();
        CHECK_FALSE(frame.lmhs.endo.op.is_zero());
        CHECK(nf_annihilation(frame));
        AsymptoticProfile p = asymptotic_profile(frame);
        CHECK(p.degree == 0);
        CHECK(p.classification == DistanceClass::FiniteDistance);
    }
}

TEST_CASE("adapted degree predicts deg p") {
    CHECK(adapted_degree(PeriodFrame::from_lmhs(pure_weight1_lmhs())) == 0);
    CHECK(adapted_degree(elliptic_frame()) == 1);
    CHECK(adapted_degree(PeriodFrame::from_lmhs(two_block_lmhs())) == 2);
    CHECK(adapted_degree(conifold_frame()) == 0);
}

TEST_CASE("metric density") {
    Polynomial y = Polynomial::variable();
    SUBCASE("constant norm has zero density") {
        CHECK(metric_density(Polynomial(1)).is_zero());
    }
    SUBCASE("p = 2y") {
        RationalFunction g = metric_density(y_power(2, 1));
        CHECK(g.num == Polynomial(Rational(1, 4)));
        CHECK(g.den == y * y);
    }
    SUBCASE("p = y^2") {
        RationalFunction g = metric_density(y_power(1, 2));
        CHECK(g.num == Polynomial(Rational(1, 2)));
        CHECK(g.den == y * y);
    }
    SUBCASE("zero polynomial is rejected") {
        CHECK_THROWS_AS(metric_density(Polynomial()), input_error);
    }
    SUBCASE("evaluation") {
        RationalFunction g = metric_density(y_power(2, 1));
        CHECK(g.eval(Rational(2)) == Rational(1, 16));
    }
}

TEST_CASE("vertical path lengths") {
    Polynomial y = Polynomial::variable();
    SUBCASE("constant p: identically zero, Cauchy in Y") {
        PathLength a = vertical_path_length(Polynomial(5), Rational(1), Rational(1000));
        PathLength b = vertical_path_length(Polynomial(5), Rational(1), Rational(1000000));
        CHECK(a.value == 0.0);
        CHECK(b.value - a.value == 0.0);
    }
    SUBCASE("p = 2y integrates to (1/2) log Y") {
        for (long yy : {1000L, 1000000L}) {
            PathLength len = vertical_path_length(y_power(2, 1), Rational(1), Rational(yy));
            double expected = 0.5 * std::log(static_cast<double>(yy));
            CHECK(std::fabs(len.value - expected) <= 1e-9 * (1.0 + expected));
            CHECK(len.error_bound <= 1e-9 * (1.0 + std::fabs(len.value)));
        }
    }
    SUBCASE("p = y^2 integrates to (sqrt 2 / 2) log Y") {
        PathLength len = vertical_path_length(y_power(1, 2), Rational(1), Rational(1000));
        double expected = std::sqrt(0.5) * std::log(1000.0);
        CHECK(std::fabs(len.value - expected) <= 1e-9 * (1.0 + expected));
    }
    SUBCASE("roots inside the interval are rejected") {
        Polynomial shifted = y - Polynomial(2);
        CHECK_THROWS_AS(vertical_path_length(shifted, Rational(1), Rational(3)), input_error);
        CHECK_THROWS_AS(vertical_path_length(y - Polynomial(1), Rational(1), Rational(2)),
                        input_error);
        CHECK_THROWS_AS(vertical_path_length(y, Rational(-1), Rational(1)), input_error);
    }
    SUBCASE("a double root just outside the interval is fine") {
        // p = (y-3)^2: G = 1/(2(y-3)^2), so the [1,2] length is log(2)/sqrt(2).
        Polynomial p = (y - Polynomial(3)) * (y - Polynomial(3));
        PathLength len = vertical_path_length(p, Rational(1), Rational(2));
        double expected = std::log(2.0) / std::sqrt(2.0);
        CHECK(std::fabs(len.value - expected) <= 1e-9 * (1.0 + expected));
    }
}

TEST_CASE("poincare comparison") {
    SUBCASE("d = 1 gives limit 1/4") {
        PoincareComparison cmp = poincare_comparison(asymptotic_profile(elliptic_frame()));
        CHECK(cmp.limit == Rational(1, 4));
    }
    SUBCASE("p = y^4 gives limit 1") {
        AsymptoticProfile profile;
        profile.p = y_power(1, 4);
        profile.degree = 4;
        profile.classification = DistanceClass::InfiniteDistance;
        profile.poincare_coefficient = "sqrt(4)/2";
        CHECK(poincare_comparison(profile).limit == Rational(1));
    }
    SUBCASE("finite distance has no scaling regime") {
        AsymptoticProfile profile = asymptotic_profile(PeriodFrame::from_lmhs(pure_weight1_lmhs()));
        CHECK_THROWS_AS(poincare_comparison(profile), input_error);
    }
}

TEST_CASE("degree criterion matches N-annihilation on random structures") {
    gen::Rng rng(808017);
    for (int t = 0; t < 40; ++t) {
        gen::RandomLmhs fx = gen::random_lmhs_fixture(rng, 8);
        PeriodFrame frame = PeriodFrame::make(fx.lmhs, fx.frame);
        AsymptoticProfile profile = asymptotic_profile(frame);
        CHECK((profile.degree == 0) == nf_annihilation(frame));
        CHECK(static_cast<unsigned>(profile.degree) == fx.expected_degree);
        CHECK(adapted_degree(frame) == fx.expected_degree);
        if (profile.degree >= 1)
            CHECK(poincare_comparison(profile).limit == Rational(profile.degree, 4));
    }
}

TEST_CASE("the norm matrix is Hermitian at real points") {
    gen::Rng rng(5150);
    const std::vector<Rational> points{Rational(1), Rational(2), Rational(1, 3)};
    for (int t = 0; t < 15; ++t) {
        gen::RandomLmhs fx = gen::random_lmhs_fixture(rng, 8);
        PolyMatrix m = hodge_norm_matrix(PeriodFrame::make(fx.lmhs, fx.frame));
        for (const Rational& y : points) {
            ExactMatrix at = m.eval(y);
            CHECK(at == at.conj_transpose());
        }
    }
}

TEST_CASE("frame changes scale p by |det|^2 and fix the density") {
    gen::Rng rng(62831);
    for (int t = 0; t < 15; ++t) {
        gen::RandomLmhs fx = gen::random_lmhs_fixture(rng, 8);
        PeriodFrame frame = PeriodFrame::make(fx.lmhs, fx.frame);
        const std::size_t pg = frame.genus();

        ExactMatrix change(pg, pg);
        do {
            for (std::size_t i = 0; i < pg; ++i)
                for (std::size_t j = 0; j < pg; ++j)
                    change(i, j) = GaussianRational(rng.small_rational(), rng.small_rational());
        } while (change.det().is_zero());

        std::vector<std::vector<GaussianRational>> mixed;
        for (std::size_t j = 0; j < pg; ++j) {
            std::vector<GaussianRational> col(frame.lmhs.dim());
            for (std::size_t a = 0; a < pg; ++a)
                for (std::size_t i = 0; i < frame.lmhs.dim(); ++i)
                    col[i] += change(a, j) * frame.vectors[a][i];
            mixed.push_back(std::move(col));
        }
        PeriodFrame other = PeriodFrame::make(fx.lmhs, mixed);

        AsymptoticProfile p1 = asymptotic_profile(frame);
        AsymptoticProfile p2 = asymptotic_profile(other);
        GaussianRational scale = change.det() * change.det().conj();
        CHECK(p2.p == scale * p1.p);
        CHECK(p2.degree == p1.degree);
        CHECK(p2.classification == p1.classification);
        CHECK(metric_density(p1.p) == metric_density(p2.p));
    }
}
