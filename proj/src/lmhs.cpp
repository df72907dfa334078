#include "degen/lmhs.hpp"

#include "degen/errors.hpp"

namespace degen {

void PolarizedLattice::validate_structural() const {
    if (form.rows() != dim || form.cols() != dim)
        throw input_error("lattice: pairing matrix shape does not match dimension");
    if (!form.is_real()) throw input_error("lattice: pairing matrix must be real rational");
    ExactMatrix expected = (weight % 2 == 0) ? form.transpose() : -form.transpose();
    if (expected != form)
        throw input_error("lattice: pairing must satisfy Q^T = (-1)^n Q for weight n");
    if (form.rank() != dim) throw input_error("lattice: pairing is degenerate");
}

GaussianRational PolarizedLattice::pairing(const std::vector<GaussianRational>& u,
                                           const std::vector<GaussianRational>& v) const {
    std::vector<GaussianRational> qv = form.apply(v);
    GaussianRational acc;
    for (std::size_t i = 0; i < dim; ++i) acc += u[i] * qv[i];
    return acc;
}

NilpotentEndo NilpotentEndo::make(PolarizedLattice lattice, ExactMatrix n) {
    lattice.validate_structural();
    if (n.rows() != lattice.dim || n.cols() != lattice.dim)
        throw input_error("endomorphism: shape does not match lattice dimension");
    if (!n.is_real()) throw input_error("endomorphism: N must be real rational");
    // nilpotency and index
    ExactMatrix power = n;
    unsigned k = 0;
    while (!power.is_zero()) {
        ++k;
        if (k > lattice.dim) throw input_error("endomorphism: N is not nilpotent");
        power = power * n;
    }
    // infinitesimal isometry: N^T Q + Q N = 0
    if (!(n.transpose() * lattice.form + lattice.form * n).is_zero())
        throw input_error("endomorphism: Q(Nu,v) + Q(u,Nv) = 0 fails");
    return NilpotentEndo{std::move(lattice), std::move(n), k};
}

Subspace WeightFiltration::step(long k) const {
    if (steps.empty()) throw std::logic_error("weight filtration: empty");
    if (k < 0) return Subspace::zero(steps.front().ambient());
    if (static_cast<std::size_t>(k) >= steps.size()) return steps.back();
    return steps[static_cast<std::size_t>(k)];
}

std::size_t WeightFiltration::ambient() const {
    return steps.empty() ? 0 : steps.front().ambient();
}

Subspace HodgeFiltration::step(long p) const {
    if (steps.empty()) throw std::logic_error("Hodge filtration: empty");
    if (p <= 0) return steps.front();
    if (static_cast<std::size_t>(p) >= steps.size()) return Subspace::zero(ambient);
    return steps[static_cast<std::size_t>(p)];
}

namespace {

const Subspace& clamped(const std::vector<Subspace>& centered, long j, long dim) {
    // centered[j + dim] = M_j for j in [-dim, dim]
    if (j < -dim) return centered.front(); // zero step
    if (j > dim) return centered.back();
    return centered[static_cast<std::size_t>(j + dim)];
}

} // namespace

std::vector<Subspace> monodromy_filtration_centered(const ExactMatrix& n) {
    if (n.rows() != n.cols()) throw input_error("monodromy filtration: not square");
    const long dim = static_cast<long>(n.rows());
    std::vector<Subspace> out;
    out.reserve(2 * dim + 1);

    // nilpotency index m
    long m = 0;
    {
        ExactMatrix power = n;
        while (!power.is_zero()) {
            ++m;
            if (m > dim) throw input_error("monodromy filtration: operator is not nilpotent");
            power = power * n;
        }
    }

    if (m == 0) {
        for (long j = -dim; j <= dim; ++j)
            out.push_back(j < 0 ? Subspace::zero(n.rows()) : Subspace::full(n.rows()));
        return out;
    }

    ExactMatrix nm = n.pow(static_cast<std::size_t>(m));
    Subspace ker_m = Subspace::kernel(nm);
    Subspace im_m = Subspace::span(nm);

    // Quotient ker N^m / im N^m carries the induced operator; its filtration
    // supplies every middle step by pullback.
    ExactMatrix ext = Subspace::extend_basis(im_m, ker_m);
    ExactMatrix solve_basis = ExactMatrix::hstack(im_m.basis(), ext);
    const std::size_t q = ext.cols();
    ExactMatrix induced(q, q);
    for (std::size_t j = 0; j < q; ++j) {
        auto c = solve_basis.solve(n.apply(ext.col(j)));
        if (!c) throw std::logic_error("monodromy filtration: quotient is not N-stable");
        for (std::size_t i = 0; i < q; ++i) induced(i, j) = (*c)[im_m.dim() + i];
    }
    std::vector<Subspace> sub = monodromy_filtration_centered(induced);

    auto pullback = [&](const Subspace& s) {
        // im N^m + lift of the quotient subspace
        ExactMatrix lifted = ext * s.basis();
        return Subspace::span(ExactMatrix::hstack(im_m.basis(), lifted));
    };

    for (long j = -dim; j <= dim; ++j) {
        if (j < -m) {
            out.push_back(Subspace::zero(n.rows()));
        } else if (j >= m) {
            out.push_back(Subspace::full(n.rows()));
        } else {
            out.push_back(pullback(clamped(sub, j, static_cast<long>(q))));
        }
    }
    return out;
}

WeightFiltration weight_filtration(const NilpotentEndo& endo) {
    const unsigned n = endo.lattice.weight;
    if (endo.nilpotency_index > n)
        throw input_error("weight filtration: nilpotency index exceeds the weight");
    std::vector<Subspace> centered = monodromy_filtration_centered(endo.op);
    const long dim = static_cast<long>(endo.lattice.dim);
    WeightFiltration w;
    w.center = n;
    w.steps.reserve(2 * n + 1);
    for (long k = 0; k <= 2 * static_cast<long>(n); ++k)
        w.steps.push_back(clamped(centered, k - static_cast<long>(n), dim));
    return w;
}

bool GradedIsoReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass()) return false;
    return true;
}

GradedIsoReport check_graded_isomorphisms(const NilpotentEndo& endo, const WeightFiltration& w) {
    for (std::size_t k = 1; k < w.steps.size(); ++k)
        if (!w.steps[k].contains(w.steps[k - 1]))
            throw input_error("graded isomorphisms: candidate filtration is not increasing");
    const long n = w.center;
    GradedIsoReport report;
    ExactMatrix power = ExactMatrix::identity(endo.lattice.dim);
    for (long ell = 0; ell <= n; ++ell) {
        if (ell > 0) power = power * endo.op;
        GradedIsoEntry e;
        e.level = static_cast<unsigned>(ell);
        e.well_defined = w.step(n - ell).contains(Subspace::image(power, w.step(n + ell))) &&
                         w.step(n - ell - 1).contains(Subspace::image(power, w.step(n + ell - 1)));
        e.dims_match = w.graded_dim(n + ell) == w.graded_dim(n - ell);
        if (e.well_defined) {
            Subspace ker_into_lower =
                Subspace::intersect(Subspace::preimage(power, w.step(n - ell - 1)), w.step(n + ell));
            e.injective = w.step(n + ell - 1).contains(ker_into_lower);
            Subspace reached = Subspace::sum(Subspace::image(power, w.step(n + ell)), w.step(n - ell - 1));
            e.surjective = reached.contains(w.step(n - ell));
        }
        report.entries.push_back(e);
    }
    return report;
}

GradedChart::GradedChart(const Subspace& below, const Subspace& at)
    : below_(below),
      at_(at),
      lift_(Subspace::extend_basis(below, at)),
      solve_basis_(ExactMatrix::hstack(below.basis(), lift_)) {}

std::vector<GaussianRational> GradedChart::project(const std::vector<GaussianRational>& v) const {
    auto c = solve_basis_.solve(v);
    if (!c) throw std::logic_error("graded chart: vector not in W_k");
    std::vector<GaussianRational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = (*c)[below_.dim() + i];
    return out;
}

Subspace GradedChart::project_subspace(const Subspace& s) const {
    Subspace cut = Subspace::intersect(s, at_);
    ExactMatrix cols(dim(), cut.dim());
    for (std::size_t j = 0; j < cut.dim(); ++j) {
        auto c = project(cut.basis().col(j));
        for (std::size_t i = 0; i < dim(); ++i) cols(i, j) = c[i];
    }
    return Subspace::span(cols);
}

ExactMatrix GradedChart::induced_map(const ExactMatrix& m, const GradedChart& src,
                                     const GradedChart& dst) {
    ExactMatrix out(dst.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        auto c = dst.project(m.apply(src.lift_.col(j)));
        for (std::size_t i = 0; i < dst.dim(); ++i) out(i, j) = c[i];
    }
    return out;
}

LimitingMixedHodge make_lmhs(PolarizedLattice lattice, ExactMatrix n, HodgeFiltration f,
                             std::optional<WeightFiltration> supplied_w) {
    NilpotentEndo endo = NilpotentEndo::make(std::move(lattice), std::move(n));
    if (f.steps.empty() || f.ambient != endo.lattice.dim)
        throw input_error("LMHS: Hodge filtration ambient mismatch");
    if (f.steps.size() != endo.lattice.weight + 1)
        throw input_error("LMHS: Hodge filtration must provide steps F^0..F^n");
    LimitingMixedHodge lmhs;
    lmhs.endo = std::move(endo);
    lmhs.F = std::move(f);
    if (supplied_w) {
        if (supplied_w->steps.size() != 2 * lmhs.endo.lattice.weight + 1 ||
            supplied_w->center != lmhs.endo.lattice.weight)
            throw input_error("LMHS: supplied weight filtration must provide steps W_0..W_{2n}");
        for (const auto& s : supplied_w->steps) {
            if (s.ambient() != lmhs.endo.lattice.dim)
                throw input_error("LMHS: supplied weight filtration ambient mismatch");
            if (!s.is_real())
                throw input_error("LMHS: weight filtration steps must be real rational subspaces");
        }
        lmhs.W = std::move(*supplied_w);
        lmhs.w_supplied = true;
    } else {
        lmhs.W = weight_filtration(lmhs.endo);
    }
    return lmhs;
}

namespace {

std::string vector_str(const std::vector<GaussianRational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
    return out + ")";
}

struct PurityDetail {
    bool pass = true;
    std::string witness;
};

PurityDetail purity_detail(const LimitingMixedHodge& lmhs, unsigned k) {
    const long n = lmhs.weight();
    GradedChart chart(lmhs.W.step(static_cast<long>(k) - 1), lmhs.W.step(k));
    const std::size_t g = chart.dim();
    if (g == 0) return {};
    for (long p = 0; p <= n + 1; ++p) {
        Subspace fp = chart.project_subspace(lmhs.F.step(p));
        Subspace fq = chart.project_subspace(lmhs.F.step(static_cast<long>(k) - p + 1)).conjugated();
        Subspace overlap = Subspace::intersect(fp, fq);
        if (overlap.dim() > 0) {
            std::vector<GaussianRational> cls = chart.lift().apply(overlap.basis().col(0));
            return {false, "class of " + vector_str(cls) + " lies in both F^" + std::to_string(p) +
                               " and conj F^" + std::to_string(k - p + 1) + " on Gr_" +
                               std::to_string(k)};
        }
        if (fp.dim() + fq.dim() != g)
            return {false, "F^" + std::to_string(p) + " Gr (+) conj F^" + std::to_string(k - p + 1) +
                               " Gr has dimension " + std::to_string(fp.dim() + fq.dim()) +
                               " != " + std::to_string(g) + " on Gr_" + std::to_string(k)};
    }
    return {};
}

} // namespace

bool induced_pure_check(const LimitingMixedHodge& lmhs, unsigned k) {
    return purity_detail(lmhs, k).pass;
}

bool check_N_type(const LimitingMixedHodge& lmhs) {
    const long n = lmhs.weight();
    for (long p = 1; p <= n; ++p)
        if (!lmhs.F.step(p - 1).contains(Subspace::image(lmhs.endo.op, lmhs.F.step(p))))
            return false;
    for (long k = 0; k <= 2 * n; ++k)
        if (!lmhs.W.step(k - 2).contains(Subspace::image(lmhs.endo.op, lmhs.W.step(k))))
            return false;
    return true;
}

PolarizationCheck primitive_polarization_check(const LimitingMixedHodge& lmhs, unsigned ell) {
    if (ell > lmhs.endo.nilpotency_index)
        throw input_error("polarization check: level exceeds nilpotency index");
    const long n = lmhs.weight();
    const long k = n + static_cast<long>(ell);
    PolarizationCheck res;

    res.upstream_pure = induced_pure_check(lmhs, static_cast<unsigned>(k));
    if (!res.upstream_pure) {
        res.witness = "induced Hodge structure on Gr_" + std::to_string(k) + " is not pure";
        return res;
    }

    GradedChart chart(lmhs.W.step(k - 1), lmhs.W.step(k));
    if (chart.dim() == 0) {
        res.first_relation = true;
        res.positivity = true;
        return res;
    }

    ExactMatrix n_ell = lmhs.endo.op.pow(ell);
    // Gram matrix of Q_l(u, v) = Q(u, N^l v) in chart coordinates.
    ExactMatrix qbar = chart.lift().transpose() * lmhs.lattice().form * (n_ell * chart.lift());

    // First bilinear relation on the graded piece.
    res.first_relation = true;
    for (long p = 0; p <= n + 1 && res.first_relation; ++p) {
        Subspace fp = chart.project_subspace(lmhs.F.step(p));
        Subspace fq = chart.project_subspace(lmhs.F.step(k - p + 1));
        if (fp.dim() == 0 || fq.dim() == 0) continue;
        ExactMatrix pairings = fp.basis().transpose() * qbar * fq.basis();
        if (!pairings.is_zero()) {
            res.first_relation = false;
            res.witness = "Q_l(F^" + std::to_string(p) + ", F^" + std::to_string(k - p + 1) +
                          ") != 0 on Gr_" + std::to_string(k);
        }
    }

    // Primitive part: kernel of N^{l+1} on Gr_k landing in Gr_{k-2l-2}.
    GradedChart target(lmhs.W.step(k - 2 * static_cast<long>(ell) - 3),
                       lmhs.W.step(k - 2 * static_cast<long>(ell) - 2));
    Subspace primitive(chart.dim());
    try {
        ExactMatrix induced =
            GradedChart::induced_map(lmhs.endo.op.pow(ell + 1), chart, target);
        primitive = Subspace::kernel(induced);
    } catch (const std::logic_error&) {
        res.positivity = false;
        res.witness = "N^{l+1} does not descend to Gr_" + std::to_string(k);
        return res;
    }

    res.positivity = true;
    std::size_t covered = 0;
    for (long p = std::max<long>(0, k - n); p <= std::min<long>(n, k) && res.positivity; ++p) {
        long q = k - p;
        Subspace hpq = Subspace::intersect(chart.project_subspace(lmhs.F.step(p)),
                                           chart.project_subspace(lmhs.F.step(q)).conjugated());
        Subspace ppq = Subspace::intersect(primitive, hpq);
        if (ppq.dim() == 0) continue;
        covered += ppq.dim();
        const ExactMatrix& u = ppq.basis();
        GaussianRational phase = i_pow(p - q);
        ExactMatrix gram = u.transpose() * qbar * u.conjugate();
        std::size_t r = ppq.dim();
        ExactMatrix herm(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) herm(a, b) = phase * gram(a, b);
        if (herm != herm.conj_transpose()) {
            res.positivity = false;
            res.witness = "Gram form on primitive (" + std::to_string(p) + "," + std::to_string(q) +
                          ") classes is not Hermitian";
            break;
        }
        // Sylvester criterion on the leading principal minors.
        for (std::size_t t = 1; t <= r; ++t) {
            ExactMatrix lead(t, t);
            for (std::size_t a = 0; a < t; ++a)
                for (std::size_t b = 0; b < t; ++b) lead(a, b) = herm(a, b);
            GaussianRational minor = lead.det();
            if (!minor.is_real() || !(minor.re > Rational(0))) {
                res.positivity = false;
                res.witness = "leading principal minor " + std::to_string(t) + " of the (" +
                              std::to_string(p) + "," + std::to_string(q) +
                              ") Gram block is " + minor.str();
                break;
            }
        }
    }
    if (res.positivity && covered != primitive.dim()) {
        res.positivity = false;
        res.witness = "primitive part is not the sum of its (p,q) components";
    }
    return res;
}

bool ValidationReport::all_pass() const {
    for (const auto& a : axioms)
        if (!a.pass) return false;
    return true;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return &a;
    return nullptr;
}

ValidationReport validate_lmhs(const LimitingMixedHodge& lmhs) {
    ValidationReport report;
    const long n = lmhs.weight();
    auto add = [&](std::string name, bool pass, std::string witness = "") {
        report.axioms.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    };

    // Weight filtration axioms.
    bool increasing = true;
    std::string inc_witness;
    for (std::size_t k = 1; k < lmhs.W.steps.size(); ++k) {
        if (!lmhs.W.steps[k].contains(lmhs.W.steps[k - 1])) {
            increasing = false;
            inc_witness = "W_" + std::to_string(k) + " does not contain W_" + std::to_string(k - 1);
            break;
        }
    }
    add("weight_filtration.increasing", increasing, inc_witness);

    bool top_full = lmhs.W.step(2 * n).dim() == lmhs.dim();
    add("weight_filtration.top_equals_ambient", top_full, "W_{2n} != V");

    bool shifts = true;
    std::string shift_witness;
    for (long k = 0; k <= 2 * n && shifts; ++k) {
        Subspace moved = Subspace::image(lmhs.endo.op, lmhs.W.step(k));
        Subspace target = lmhs.W.step(k - 2);
        for (std::size_t j = 0; j < moved.dim() && shifts; ++j) {
            if (!target.contains(moved.basis().col(j))) {
                shifts = false;
                shift_witness = "N W_" + std::to_string(k) + " contains " +
                                vector_str(moved.basis().col(j)) + " outside W_" +
                                std::to_string(k - 2);
            }
        }
    }
    add("weight_filtration.N_shifts_by_two", shifts, shift_witness);

    bool graded_ok = false;
    std::string graded_witness = "candidate is not an increasing filtration";
    if (increasing) {
        GradedIsoReport g = check_graded_isomorphisms(lmhs.endo, lmhs.W);
        graded_ok = g.all_pass();
        if (!graded_ok) {
            for (const auto& e : g.entries)
                if (!e.pass()) {
                    graded_witness = "N^" + std::to_string(e.level) + ": Gr_{n+" +
                                     std::to_string(e.level) + "} -> Gr_{n-" + std::to_string(e.level) +
                                     "} is not bijective";
                    break;
                }
        }
    }
    add("weight_filtration.graded_isomorphisms", graded_ok, graded_witness);

    bool matches = true;
    std::string match_witness;
    if (lmhs.w_supplied) {
        WeightFiltration built = weight_filtration(lmhs.endo);
        matches = built == lmhs.W;
        match_witness = "supplied W differs from the filtration determined by N";
    }
    add("weight_filtration.matches_monodromy_filtration", matches, match_witness);

    // Hodge filtration shape.
    bool decreasing = true;
    std::string dec_witness;
    for (std::size_t p = 1; p < lmhs.F.steps.size(); ++p) {
        if (!lmhs.F.steps[p - 1].contains(lmhs.F.steps[p])) {
            decreasing = false;
            dec_witness = "F^" + std::to_string(p - 1) + " does not contain F^" + std::to_string(p);
            break;
        }
    }
    add("hodge_filtration.decreasing", decreasing, dec_witness);
    add("hodge_filtration.F0_is_ambient", lmhs.F.step(0).dim() == lmhs.dim(), "F^0 != V");

    // Purity of every graded piece.
    for (long k = 0; k <= 2 * n; ++k) {
        PurityDetail pure;
        if (increasing)
            pure = purity_detail(lmhs, static_cast<unsigned>(k));
        else
            pure = {false, "skipped: W not increasing"};
        add("purity.k" + std::to_string(k), pure.pass, pure.witness);
    }

    {
        bool n_type = true;
        std::string witness;
        for (long p = 1; p <= n && n_type; ++p) {
            Subspace moved = Subspace::image(lmhs.endo.op, lmhs.F.step(p));
            Subspace target = lmhs.F.step(p - 1);
            for (std::size_t j = 0; j < moved.dim() && n_type; ++j) {
                if (!target.contains(moved.basis().col(j))) {
                    n_type = false;
                    witness = "N maps F^" + std::to_string(p) + " onto " +
                              vector_str(moved.basis().col(j)) + " outside F^" +
                              std::to_string(p - 1);
                }
            }
        }
        for (long k = 0; k <= 2 * n && n_type; ++k) {
            Subspace moved = Subspace::image(lmhs.endo.op, lmhs.W.step(k));
            Subspace target = lmhs.W.step(k - 2);
            for (std::size_t j = 0; j < moved.dim() && n_type; ++j) {
                if (!target.contains(moved.basis().col(j))) {
                    n_type = false;
                    witness = "N maps W_" + std::to_string(k) + " onto " +
                              vector_str(moved.basis().col(j)) + " outside W_" +
                              std::to_string(k - 2);
                }
            }
        }
        add("N_type_minus_one_minus_one", n_type, witness);
    }

    // Polarization of the primitive parts, positivity and first relation
    // reported separately per level.
    for (unsigned ell = 0; ell <= lmhs.endo.nilpotency_index; ++ell) {
        PolarizationCheck pc;
        if (increasing) {
            pc = primitive_polarization_check(lmhs, ell);
        } else {
            pc.witness = "skipped: W not increasing";
        }
        add("polarization.first_relation.l" + std::to_string(ell),
            pc.upstream_pure && pc.first_relation, pc.witness);
        add("polarization.positivity.l" + std::to_string(ell),
            pc.upstream_pure && pc.positivity, pc.witness);
    }

    return report;
}

} // namespace degen
