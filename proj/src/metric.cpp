#include "degen/metric.hpp"

#include "degen/errors.hpp"

#include <cmath>
#include <sstream>

namespace degen {

PeriodFrame PeriodFrame::make(LimitingMixedHodge lmhs,
                              std::vector<std::vector<GaussianRational>> vectors) {
    const std::size_t dim = lmhs.dim();
    for (const auto& v : vectors)
        if (v.size() != dim) throw input_error("frame: vector length does not match dimension");
    Subspace spanned = Subspace::span_of(dim, vectors);
    if (spanned.dim() != vectors.size())
        throw input_error("frame: vectors are linearly dependent");
    Subspace top = lmhs.F.step(static_cast<long>(lmhs.weight()));
    if (spanned != top) throw input_error("frame: vectors do not span F^n");
    PeriodFrame f;
    f.lmhs = std::move(lmhs);
    f.vectors = std::move(vectors);
    return f;
}

PeriodFrame PeriodFrame::from_lmhs(LimitingMixedHodge lmhs) {
    Subspace top = lmhs.F.step(static_cast<long>(lmhs.weight()));
    std::vector<std::vector<GaussianRational>> cols;
    for (std::size_t j = 0; j < top.dim(); ++j) cols.push_back(top.basis().col(j));
    return make(std::move(lmhs), std::move(cols));
}

PolyMatrix hodge_norm_matrix(const PeriodFrame& frame) {
    const auto& lat = frame.lmhs.lattice();
    const std::size_t pg = frame.genus();
    // exp(2 i y N) applied to each frame vector, as polynomial columns
    GaussianRational two_i(Rational(0), Rational(2));
    PolyMatrix orbit = nilpotent_exp(frame.lmhs.endo.op, two_i);
    GaussianRational phase = i_pow(static_cast<long>(frame.lmhs.weight()));
    PolyMatrix gram(pg, pg);
    for (std::size_t a = 0; a < pg; ++a) {
        // column vector of polynomials: exp(2iyN) a_a
        std::vector<Polynomial> moved(lat.dim);
        for (std::size_t i = 0; i < lat.dim; ++i) {
            Polynomial acc;
            for (std::size_t j = 0; j < lat.dim; ++j)
                if (!frame.vectors[a][j].is_zero())
                    acc += frame.vectors[a][j] * orbit(i, j);
            moved[i] = acc;
        }
        for (std::size_t b = 0; b < pg; ++b) {
            // i^n Q(moved, conj a_b)
            Polynomial entry;
            for (std::size_t i = 0; i < lat.dim; ++i) {
                GaussianRational qrow;
                for (std::size_t j = 0; j < lat.dim; ++j)
                    if (!lat.form(i, j).is_zero())
                        qrow += lat.form(i, j) * frame.vectors[b][j].conj();
                if (!qrow.is_zero()) entry += qrow * moved[i];
            }
            gram(a, b) = phase * entry;
        }
    }
    return gram;
}

bool nf_annihilation(const PeriodFrame& frame) {
    for (const auto& v : frame.vectors) {
        for (const auto& z : frame.lmhs.endo.op.apply(v))
            if (!z.is_zero()) return false;
    }
    return true;
}

AsymptoticProfile asymptotic_profile(const PeriodFrame& frame) {
    AsymptoticProfile out;
    out.p = poly_det(hodge_norm_matrix(frame));
    if (!out.p.is_real())
        throw input_error("Hodge-norm determinant has nonreal coefficients; "
                          "the input violates the polarization sign convention");
    if (out.p.is_zero() || !(out.p.leading().re > Rational(0)))
        throw input_error("Hodge-norm determinant must have positive leading coefficient; "
                          "the input violates the polarization sign convention");
    out.degree = out.p.degree();
    out.classification =
        out.degree == 0 ? DistanceClass::FiniteDistance : DistanceClass::InfiniteDistance;
    if ((out.degree == 0) != nf_annihilation(frame))
        throw math_failure("degree criterion and N-annihilation disagree on the same input");
    out.poincare_coefficient = "sqrt(" + std::to_string(out.degree) + ")/2";
    return out;
}

unsigned adapted_degree(const PeriodFrame& frame) {
    const long n = frame.lmhs.weight();
    Subspace top = frame.lmhs.F.step(n);
    // q_l = number of adapted basis vectors at level exactly l, read off from
    // the jumps of dim(F^n cap W_{n+l}).
    unsigned total = 0;
    std::size_t below = Subspace::intersect(top, frame.lmhs.W.step(n - 1)).dim();
    for (long ell = 0; ell <= static_cast<long>(frame.lmhs.endo.nilpotency_index); ++ell) {
        std::size_t at = Subspace::intersect(top, frame.lmhs.W.step(n + ell)).dim();
        total += static_cast<unsigned>(at - below) * static_cast<unsigned>(ell);
        below = at;
    }
    return total;
}

RationalFunction RationalFunction::make(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("rational function: zero denominator");
    if (num.is_zero()) return {Polynomial(), Polynomial(1)};
    Polynomial g = Polynomial::gcd(num, den);
    Polynomial rn = num.exact_div(g);
    Polynomial rd = den.exact_div(g);
    GaussianRational lead = rd.leading();
    rn = lead.inverse() * rn;
    rd = lead.inverse() * rd;
    return {rn, rd};
}

Rational RationalFunction::eval(const Rational& y) const {
    GaussianRational d = den.eval(y);
    if (d.is_zero()) throw std::domain_error("rational function: pole at evaluation point");
    GaussianRational v = num.eval(y) / d;
    if (!v.is_real()) throw std::logic_error("rational function: nonreal value");
    return v.re;
}

std::string RationalFunction::str() const {
    if (num.is_zero()) return "0";
    if (den == Polynomial(1)) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

RationalFunction metric_density(const Polynomial& p) {
    if (p.is_zero()) throw input_error("metric density: p is identically zero");
    Polynomial dp = p.derivative();
    Polynomial num = dp * dp - p * p.derivative().derivative();
    Polynomial den = GaussianRational(4) * (p * p);
    return RationalFunction::make(num, den);
}

namespace {

int sign_at(const Polynomial& p, const Rational& x) {
    GaussianRational v = p.eval(x);
    return v.re.sign();
}

// Number of distinct real roots of the squarefree part of p in (a, b],
// by Sturm's chain.
int sturm_roots_in(const Polynomial& p, const Rational& a, const Rational& b) {
    Polynomial sf = p.exact_div(Polynomial::gcd(p, p.derivative()));
    std::vector<Polynomial> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        const Polynomial& s = chain[chain.size() - 2];
        const Polynomial& t = chain.back();
        chain.push_back(-(s.divide(t).rem));
    }
    chain.pop_back();
    auto variations = [&](const Rational& x) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sign_at(q, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(a) - variations(b);
}

struct QuadratureState {
    const RationalFunction* g;
    double value = 0.0;
    double error = 0.0;
    double tol = 0.0;
    double total_span = 1.0;
};

double integrand(const RationalFunction& g, const Rational& y) {
    double v = g.eval(y).to_double();
    return v <= 0.0 ? 0.0 : std::sqrt(v);
}

// Deterministic adaptive Simpson with Richardson correction; the error
// estimate |S2 - S1|/15 is accumulated into a global bound.
void adaptive_simpson(QuadratureState& st, const Rational& a, double fa, const Rational& b,
                      double fb, const Rational& m, double fm, double whole, int depth) {
    Rational lm = (a + m) / Rational(2);
    Rational rm = (m + b) / Rational(2);
    double flm = integrand(*st.g, lm);
    double frm = integrand(*st.g, rm);
    double ha = (m - a).to_double() / 6.0;
    double hb = (b - m).to_double() / 6.0;
    double left = ha * (fa + 4.0 * flm + fm);
    double right = hb * (fm + 4.0 * frm + fb);
    double err = (left + right - whole) / 15.0;
    double local_tol = st.tol * (b - a).to_double() / st.total_span;
    if (std::fabs(err) <= local_tol || depth >= 48) {
        st.value += left + right + err;
        st.error += std::fabs(err);
        return;
    }
    adaptive_simpson(st, a, fa, m, fm, lm, flm, left, depth + 1);
    adaptive_simpson(st, m, fm, b, fb, rm, frm, right, depth + 1);
}

} // namespace

PathLength vertical_path_length(const Polynomial& p, const Rational& y0, const Rational& big_y) {
    if (!p.is_real()) throw input_error("path length: p must have real coefficients");
    if (!(Rational(0) < y0 && y0 < big_y)) throw input_error("path length: need 0 < y0 < Y");
    if (sign_at(p, y0) <= 0 || sign_at(p, big_y) <= 0 || sturm_roots_in(p, y0, big_y) != 0)
        throw input_error("path length: p has a root in [y0, Y]");

    RationalFunction g = metric_density(p);
    if (g.is_zero()) return {0.0, 0.0};

    auto integrate = [&](double tol_abs) {
        QuadratureState st;
        st.g = &g;
        st.total_span = (big_y - y0).to_double();
        st.tol = tol_abs;
        Rational mid = (y0 + big_y) / Rational(2);
        double fa = integrand(g, y0);
        double fb = integrand(g, big_y);
        double fm = integrand(g, mid);
        double whole = (big_y - y0).to_double() / 6.0 * (fa + 4.0 * fm + fb);
        adaptive_simpson(st, y0, fa, big_y, fb, mid, fm, whole, 0);
        return st;
    };

    // Coarse composite estimate seeds the tolerance budget; a second adaptive
    // pass re-budgets from the first pass's value so the accumulated bound
    // certifies error <= 1e-9 * (1 + result) with a factor-10 margin.
    double rough = 0.0;
    {
        const int panels = 64;
        Rational h = (big_y - y0) / Rational(panels);
        double prev = integrand(g, y0);
        for (int i = 1; i <= panels; ++i) {
            Rational x = y0 + Rational(i) * h;
            double cur = integrand(g, x);
            rough += 0.5 * (prev + cur) * h.to_double();
            prev = cur;
        }
    }
    QuadratureState first = integrate(1e-10 * (1.0 + std::fabs(rough)));
    QuadratureState final_pass = integrate(1e-10 * (1.0 + std::fabs(first.value)));
    return {final_pass.value, final_pass.error};
}

PoincareComparison poincare_comparison(const AsymptoticProfile& profile) {
    if (profile.degree == 0)
        throw input_error("Poincare comparison: finite-distance profile has no scaling regime");
    RationalFunction g = metric_density(profile.p);
    if (g.num.degree() + 2 != g.den.degree())
        throw math_failure("metric density does not decay like 1/y^2");
    // den is monic, so the limit of y^2 G(y) is the leading numerator coefficient.
    GaussianRational lead = g.num.leading();
    if (!lead.is_real()) throw math_failure("metric density leading coefficient is nonreal");
    PoincareComparison out;
    out.degree = static_cast<unsigned>(profile.degree);
    out.limit = lead.re;
    std::ostringstream os;
    os << "y^2 * G(y) -> " << out.limit.str() << " as y -> infinity; "
       << "the metric approaches " << out.limit.str() << " / y^2 |dz|^2, a "
       << profile.poincare_coefficient << "-scaled Poincare metric";
    out.statement = os.str();
    return out;
}

} // namespace degen
