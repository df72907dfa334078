#include "degen/cli.hpp"

#include "degen/errors.hpp"
#include "degen/fixtures.hpp"
#include "degen/generators.hpp"
#include "degen/json_io.hpp"
#include "degen/metric.hpp"
#include "degen/oracles.hpp"
#include "degen/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace degen::cli {

using nlohmann::json;

namespace {

struct OutputOptions {
    std::string format = "text"; // "text" | "json"
    std::string out_path;        // empty = stdout
};

void emit(const DiagnosticReport& report, const OutputOptions& opts, std::ostream& out) {
    std::string rendered =
        opts.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (opts.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw input_error("cannot write report to " + opts.out_path);
        f << rendered;
        out << "report written to " << opts.out_path << "\n";
    }
}

json axioms_to_json(const ValidationReport& validation) {
    json arr = json::array();
    for (const auto& a : validation.axioms) {
        json entry{{"name", a.name}, {"pass", a.pass}};
        if (!a.witness.empty()) entry["witness"] = a.witness;
        arr.push_back(entry);
    }
    return arr;
}

json lmhs_summary(const LimitingMixedHodge& lmhs, bool frame_supplied, std::size_t pg) {
    json summary;
    summary["dim"] = lmhs.dim();
    summary["weight"] = lmhs.weight();
    summary["nilpotency_index"] = lmhs.endo.nilpotency_index;
    summary["p_g"] = pg;
    summary["W_supplied"] = lmhs.w_supplied;
    summary["frame_supplied"] = frame_supplied;
    return summary;
}

DiagnosticReport handle_mhs(const json& doc) {
    io::LmhsFixtureDoc fixture = io::parse_lmhs_fixture(doc);
    ValidationReport validation = validate_lmhs(fixture.lmhs);

    DiagnosticReport report;
    report.subject = "mhs";
    report.fixture_summary =
        lmhs_summary(fixture.lmhs, fixture.frame_supplied,
                     fixture.lmhs.F.step(static_cast<long>(fixture.lmhs.weight())).dim());
    report.verdicts["valid_polarized_lmhs"] = validation.all_pass();
    report.evidence["axioms"] = axioms_to_json(validation);
    json graded = json::array();
    for (long k = 0; k <= 2L * fixture.lmhs.weight(); ++k)
        graded.push_back(fixture.lmhs.W.graded_dim(k));
    report.evidence["graded_dims"] = graded;
    report.exit_status = validation.all_pass() ? 0 : 1;
    return report;
}

DiagnosticReport handle_metric(const json& doc, const std::string& y0_text,
                               const std::string& big_y_text) {
    io::LmhsFixtureDoc fixture = io::parse_lmhs_fixture(doc);
    ValidationReport validation = validate_lmhs(fixture.lmhs);

    DiagnosticReport report;
    report.subject = "metric";
    report.fixture_summary = lmhs_summary(fixture.lmhs, fixture.frame_supplied, fixture.frame.size());

    if (!validation.all_pass()) {
        report.verdicts["valid_polarized_lmhs"] = false;
        report.evidence["axioms"] = axioms_to_json(validation);
        report.warnings.push_back("metric asymptotics skipped: the input is not a valid polarized "
                                  "limiting mixed Hodge structure");
        report.exit_status = 1;
        return report;
    }

    if (fixture.frame.empty())
        throw input_error("the Hodge metric needs p_g >= 1 (F^n is zero)");
    PeriodFrame frame = PeriodFrame::make(std::move(fixture.lmhs), std::move(fixture.frame));
    AsymptoticProfile profile = asymptotic_profile(frame);
    unsigned predicted = adapted_degree(frame);
    bool annihilated = nf_annihilation(frame);
    RationalFunction density = metric_density(profile.p);

    report.verdicts["classification"] = to_string(profile.classification) + " distance";
    report.verdicts["degree_criterion"] =
        std::string("d = 0 iff N F^n = 0: d = ") + std::to_string(profile.degree) +
        ", N F^n = " + (annihilated ? "0" : "nonzero");

    report.evidence["p"] = io::polynomial_to_json(profile.p);
    report.evidence["p_pretty"] = profile.p.str();
    report.evidence["d"] = profile.degree;
    report.evidence["adapted_degree"] = predicted;
    report.evidence["nf_annihilation"] = annihilated;
    report.evidence["density_G"] = density.str();
    report.evidence["density_num"] = io::polynomial_to_json(density.num);
    report.evidence["density_den"] = io::polynomial_to_json(density.den);
    report.evidence["poincare_coefficient"] = profile.poincare_coefficient;

    if (profile.degree >= 1) {
        PoincareComparison cmp = poincare_comparison(profile);
        report.evidence["poincare_limit"] = cmp.limit.str();
        report.evidence["poincare_statement"] = cmp.statement;
    }

    if (!y0_text.empty() || !big_y_text.empty()) {
        if (y0_text.empty() || big_y_text.empty())
            throw input_error("path length needs both --y0 and --Y");
        Rational y0 = Rational::parse(y0_text);
        Rational big_y = Rational::parse(big_y_text);
        PathLength len = vertical_path_length(profile.p, y0, big_y);
        json jlen;
        jlen["y0"] = y0.str();
        jlen["Y"] = big_y.str();
        jlen["value"] = len.value;
        jlen["error_bound"] = len.error_bound;
        report.evidence["vertical_length"] = jlen;
    }

    if (static_cast<unsigned>(profile.degree) != predicted) {
        report.warnings.push_back(
            "adapted block-degree count disagrees with deg p; trusting the determinant");
        report.exit_status = 1;
    }
    return report;
}

DiagnosticReport handle_curve(const json& doc, const std::vector<int>& ms) {
    io::CurveFixtureDoc fixture = io::parse_curve_fixture(doc);
    const StableModel& model = fixture.model;

    DiagnosticReport report;
    report.subject = "curve";
    report.fixture_summary["vertices"] = model.graph.genus;
    json edges = json::array();
    for (const auto& [a, b] : model.graph.edges) edges.push_back(json::array({a, b}));
    report.fixture_summary["edges"] = edges;
    report.fixture_summary["V"] = model.graph.vertex_count();
    report.fixture_summary["E"] = model.graph.edge_count();
    report.fixture_summary["generic_genus"] = model.generic_genus;
    report.fixture_summary["generic_genus_supplied"] = fixture.genus_supplied;

    StabilityReport stability = stability_check(model);
    report.verdicts["stable"] = stability.stable;
    if (!stability.stable) {
        report.evidence["stability_violations"] = stability.violating_vertices;
        report.exit_status = 1;
        return report;
    }

    int derived = genus_formula(model.graph);
    report.evidence["genus_formula"] = derived;
    report.evidence["branch_degrees"] = model.graph.branch_degrees();
    if (derived != model.generic_genus)
        report.warnings.push_back("supplied generic genus " + std::to_string(model.generic_genus) +
                                  " differs from the graph arithmetic genus " +
                                  std::to_string(derived) + "; using the supplied value");
    if (model.graph.has_loops())
        report.warnings.push_back("graph has self-nodes (loops); branch counts treat each loop "
                                  "as two node branches");

    json per_m = json::array();
    bool any_residual = false;
    for (int m : ms) {
        IncompletenessResult r = gm_incompleteness_test(model, m);
        json row;
        row["m"] = m;
        row["cover_genus_smooth"] = r.smooth_total;
        row["cover_genus_central"] = r.central_total;
        row["residual"] = r.residual;
        row["metric"] = r.incomplete ? "incomplete (finite distance)" : "complete (infinite distance)";
        per_m.push_back(row);
        any_residual = any_residual || r.residual != 0;
    }
    report.evidence["per_m"] = per_m;

    {
        // Pluri-genus table at the largest requested level.
        int m_top = *std::max_element(ms.begin(), ms.end());
        PluriGenusTable table = plurigenus_table(model, m_top);
        json jt;
        jt["m"] = m_top;
        jt["entries"] = table.entries;
        jt["row_sums"] = table.row_sums;
        jt["grand_total"] = table.grand_total;
        report.evidence["plurigenus_table"] = jt;
    }

    std::set<int> distinct(ms.begin(), ms.end());
    if (distinct.size() >= 3) {
        ThreeMVerdict verdict = three_m_criterion(model, ms);
        report.verdicts["smoothable"] =
            verdict.smoothable
                ? "yes: residual vanishes at three levels, so the central fiber is one smooth "
                  "component of full genus"
                : "no: cover-genus residual is nonzero";
        if (!verdict.smoothable) report.evidence["failing_m"] = verdict.failing_ms;
    } else {
        report.verdicts["smoothable"] = "undetermined: need at least 3 distinct levels m";
    }

    report.exit_status = any_residual ? 1 : 0;
    return report;
}

DiagnosticReport handle_surgery(const json& doc) {
    SurgeryDatum datum = io::parse_surgery_fixture(doc);
    SurgeryReport surgery = surgery_report(datum);

    DiagnosticReport report;
    report.subject = "surgery";
    report.fixture_summary["betti_X"] = surgery.betti_x;
    report.fixture_summary["nodes"] = datum.nodes;
    report.fixture_summary["relation_rank"] = datum.relation_rank;

    bool smoothable = friedman_smoothability_flag(datum);
    report.verdicts["global_smoothing_possible"] = smoothable;
    report.verdicts["monodromy"] =
        surgery.monodromy_nontrivial
            ? "nontrivial: the vanishing-cycle space has dimension rho > 0, so N != 0"
            : "trivial on ranks: rho = 0 leaves no vanishing cohomology";

    report.evidence["betti_X_s"] = surgery.betti_xs;
    report.evidence["betti_X_0"] = surgery.betti_x0;
    report.evidence["euler_X"] = surgery.euler_x;
    report.evidence["euler_X_s"] = surgery.euler_xs;
    report.evidence["euler_X_0"] = surgery.euler_x0;
    report.evidence["vanishing_cycle_dim"] = surgery.vanishing_cycle_dim;

    report.warnings.push_back("Betti numbers are ranks over Q; integral torsion is ignored");
    report.exit_status = smoothable ? 0 : 1;
    return report;
}

DiagnosticReport handle_pg(const ComponentGenera& data) {
    DiagnosticReport report;
    report.subject = "pg";
    report.fixture_summary["generic"] = data.pg_generic;
    report.fixture_summary["components"] = data.pg_components;

    DistanceClass cls = pg_equality_check(data);
    report.verdicts["classification"] = to_string(cls) + " distance";
    report.verdicts["criterion"] = "finite iff p_g(generic) = sum of component p_g";
    report.evidence["component_sum"] = data.component_sum();

    if (data.pg_generic == 1) {
        CyComponentCheck cy = cy_component_criterion(data.pg_components);
        report.verdicts["cy_single_component"] = cy.pass;
        if (cy.inconsistent_input)
            report.warnings.push_back("more than one unit of h^{n,0} among components contradicts "
                                      "p_g = 1");
    }
    report.exit_status = 0;
    return report;
}

DiagnosticReport handle_enumerate(int vmax, int emax, int gmax, bool check_criterion) {
    DiagnosticReport report;
    report.subject = "enumerate";
    report.fixture_summary["v_max"] = vmax;
    report.fixture_summary["e_max"] = emax;
    report.fixture_summary["g_vertex_max"] = gmax;

    long total = 0;
    std::map<std::pair<int, int>, long> by_shape;
    long counterexamples = 0;
    long smooth_shapes = 0;
    enumerate_stable_models(vmax, emax, gmax, [&](const StableModel& model) {
        ++total;
        ++by_shape[{static_cast<int>(model.graph.vertex_count()),
                    static_cast<int>(model.graph.edge_count())}];
        if (check_criterion) {
            bool zero_at_all = true;
            for (int m : {2, 3, 4})
                zero_at_all = zero_at_all && gm_incompleteness_test(model, m).residual == 0;
            if (zero_at_all) {
                ++smooth_shapes;
                if (model.graph.vertex_count() != 1 || model.graph.edge_count() != 0)
                    ++counterexamples;
            }
        }
    });

    report.evidence["models"] = total;
    json shapes = json::array();
    for (const auto& [shape, count] : by_shape)
        shapes.push_back(json{{"V", shape.first}, {"E", shape.second}, {"count", count}});
    report.evidence["by_shape"] = shapes;

    if (check_criterion) {
        report.verdicts["three_level_criterion"] =
            counterexamples == 0
                ? "confirmed: vanishing residual at m = 2, 3, 4 occurs only for a single smooth "
                  "component"
                : "violated";
        report.evidence["residual_zero_models"] = smooth_shapes;
        report.evidence["counterexamples"] = counterexamples;
        report.exit_status = counterexamples == 0 ? 0 : 1;
    }
    return report;
}

// ---------------------------------------------------------------------------
// selftest

struct SelftestRow {
    std::string name;
    bool pass;
    std::string detail;
};

// Corruptions for the fault-injection dev mode: each fixture kind gets a
// small mutation that must flip its selftest row to FAIL.
void corrupt_fixture(json& doc, const std::string& kind) {
    if (kind == "metric" || kind == "lmhs")
        doc["N"][0][0] = "1"; // no longer nilpotent
    else if (kind == "curve")
        doc["vertices"][0]["genus"] = doc["vertices"][0]["genus"].get<int>() + 1;
    else if (kind == "surgery")
        doc["relation_rank"] = 0;
    else if (kind == "pg")
        doc["components"] = json::array({0});
}

DiagnosticReport run_fixture_kind(const fixtures::BundledFixture& fx, const std::vector<int>& ms,
                                  const std::string& fault_name) {
    json doc = json::parse(fx.json_text);
    if (fx.name == fault_name) corrupt_fixture(doc, fx.kind);
    if (fx.kind == "metric") return handle_metric(doc, "", "");
    if (fx.kind == "lmhs") return handle_mhs(doc);
    if (fx.kind == "curve") return handle_curve(doc, ms);
    if (fx.kind == "surgery") return handle_surgery(doc);
    if (fx.kind == "pg") return handle_pg(io::parse_pg_fixture(doc));
    throw input_error("selftest: unknown fixture kind " + fx.kind);
}

void selftest_fixture_rows(std::vector<SelftestRow>& rows, const std::string& fault_name) {
    auto guarded = [&](const std::string& name, const std::function<bool()>& check) {
        bool ok = false;
        std::string detail;
        try {
            ok = check();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rows.push_back({name, ok, detail});
    };
    auto run = [&](const char* fixture_name, std::vector<int> ms = {}) {
        return run_fixture_kind(fixtures::by_name(fixture_name), ms, fault_name);
    };

    guarded("fixture.elliptic: p = 2y, infinite distance", [&] {
        DiagnosticReport r = run("elliptic");
        return r.evidence["p_pretty"] == "2*y" && r.evidence["d"] == 1 &&
               r.verdicts["classification"] == "infinite distance" && r.exit_status == 0;
    });
    guarded("fixture.pure: constant p, finite distance", [&] {
        DiagnosticReport r = run("pure");
        return r.evidence["d"] == 0 && r.verdicts["classification"] == "finite distance" &&
               r.exit_status == 0;
    });
    guarded("fixture.two_block: p = 4y^2", [&] {
        DiagnosticReport r = run("two_block");
        return r.evidence["p_pretty"] == "4*y^2" && r.evidence["d"] == 2 && r.exit_status == 0;
    });
    guarded("fixture.conifold: finite distance with N != 0", [&] {
        DiagnosticReport r = run("conifold");
        return r.evidence["d"] == 0 && r.evidence["nf_annihilation"] == true &&
               r.fixture_summary["nilpotency_index"] == 1 && r.exit_status == 0;
    });
    guarded("fixture.mhs_elliptic: all axioms pass", [&] {
        DiagnosticReport r = run("mhs_elliptic");
        return r.verdicts["valid_polarized_lmhs"] == true && r.exit_status == 0;
    });
    guarded("fixture.tree: node invisible at m = 1, detected at m = 2", [&] {
        DiagnosticReport r = run("tree", {1, 2, 3});
        const auto& per_m = r.evidence["per_m"];
        return r.exit_status == 1 && per_m[0]["residual"] == 0 && per_m[1]["residual"] == 1 &&
               per_m[2]["residual"] == 2;
    });
    guarded("fixture.two_loop: stable, loop convention flagged", [&] {
        DiagnosticReport r = run("two_loop", {2, 3, 4});
        bool warned = false;
        for (const auto& w : r.warnings) warned = warned || w.find("loops") != std::string::npos;
        return r.verdicts["stable"] == true && warned &&
               r.evidence["genus_formula"] == r.fixture_summary["generic_genus"];
    });
    guarded("fixture.surgery_one_node: b_3 chain 202 -> 204 -> 203", [&] {
        DiagnosticReport r = run("surgery_one_node");
        return r.evidence["betti_X_s"][3] == 204 && r.evidence["betti_X_0"][3] == 203 &&
               r.exit_status == 0;
    });
    guarded("fixture.pg_cy: finite distance, single volume component", [&] {
        DiagnosticReport r = run("pg_cy");
        return r.verdicts["classification"] == "finite distance" &&
               r.verdicts["cy_single_component"] == true && r.exit_status == 0;
    });
    guarded("determinism: identical fixture gives byte-identical report", [&] {
        DiagnosticReport a = run_fixture_kind(fixtures::by_name("elliptic"), {}, "");
        DiagnosticReport b = run_fixture_kind(fixtures::by_name("elliptic"), {}, "");
        return a.to_json().dump(2) == b.to_json().dump(2);
    });
}

void selftest_property_rows(std::vector<SelftestRow>& rows) {
    auto expect = [&](const std::string& name, bool ok) { rows.push_back({name, ok, ""}); };

    {
        gen::Rng rng(20240811);
        bool ok = true;
        for (int t = 0; t < 32 && ok; ++t) {
            std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
            ExactMatrix n = gen::random_nilpotent(rng, dim);
            ok = monodromy_filtration_centered(n) == oracles::jordan_filtration_centered(n);
        }
        expect("property.weight_filtration: inductive = Jordan-basis route (32 cases)", ok);
    }
    {
        gen::Rng rng(987654321);
        bool ok = true;
        for (int t = 0; t < 24 && ok; ++t) {
            gen::RandomLmhs fx = gen::random_lmhs_fixture(rng, 8);
            PeriodFrame frame = PeriodFrame::make(fx.lmhs, fx.frame);
            AsymptoticProfile profile = asymptotic_profile(frame);
            ok = validate_lmhs(frame.lmhs).all_pass() &&
                 (profile.degree == 0) == nf_annihilation(frame) &&
                 static_cast<unsigned>(profile.degree) == fx.expected_degree &&
                 adapted_degree(frame) == fx.expected_degree;
        }
        expect("property.metric: degree criterion = N-annihilation (24 cases)", ok);
    }
    {
        bool ok = true;
        enumerate_stable_models(3, 3, 2, [&](const StableModel& model) {
            for (int m = 1; m <= 4 && ok; ++m) {
                long diff = oracles::cover_pg_smooth_term_sum(model.generic_genus, m) -
                            oracles::cover_pg_central_term_sum(model, m);
                long closed = static_cast<long>(m) * static_cast<long>(model.graph.edge_count()) -
                              (static_cast<long>(model.graph.vertex_count()) - 1);
                ok = ok && diff == closed &&
                     diff == gm_incompleteness_test(model, m).residual;
            }
        });
        expect("property.curve: residual closed form on small enumeration", ok);
    }
    {
        bool ok = true;
        for (int g = 2; g <= 6; ++g)
            for (int m = 1; m <= 6; ++m)
                ok = ok && cover_pg_smooth(g, m) == oracles::cover_pg_smooth_term_sum(g, m);
        expect("property.cover: m^2(g-1)+1 matches the term-by-term sum", ok);
    }
    {
        gen::Rng rng(55555);
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            SurgeryDatum d = gen::random_surgery_datum(rng);
            SurgeryReport r = surgery_report(d);
            ok = r.euler_x - 2 * d.nodes == r.euler_xs && r.euler_x - d.nodes == r.euler_x0 &&
                 d.nodes - d.relation_rank == r.betti_x[2] - r.betti_xs[2] &&
                 d.relation_rank == r.betti_xs[3] - r.betti_x0[3] &&
                 r.betti_xs[2] + (d.nodes - d.relation_rank) == d.betti_x[2] &&
                 r.betti_xs[3] - 2 * d.relation_rank == d.betti_x[3];
        }
        expect("property.surgery: Euler closure, rank identities, reconstruction (100 cases)", ok);
    }
}

DiagnosticReport handle_selftest(const std::string& fault_name) {
    std::vector<SelftestRow> rows;
    selftest_fixture_rows(rows, fault_name);
    selftest_property_rows(rows);

    DiagnosticReport report;
    report.subject = "selftest";
    report.fixture_summary["bundled_fixtures"] = fixtures::all().size();
    if (!fault_name.empty()) report.fixture_summary["injected_fault"] = fault_name;
    json jrows = json::array();
    bool all = true;
    for (const auto& row : rows) {
        json entry{{"name", row.name}, {"pass", row.pass}};
        if (!row.pass && !row.detail.empty()) entry["detail"] = row.detail;
        jrows.push_back(entry);
        all = all && row.pass;
    }
    report.evidence["rows"] = jrows;
    report.verdicts["all_pass"] = all;
    report.exit_status = all ? 0 : 1;
    return report;
}

// Fixtures are self-describing; the kind must match the subcommand that
// consumes it (the two Hodge-theoretic kinds share a payload).
json load_fixture(const std::string& path, std::initializer_list<const char*> kinds) {
    json doc = io::load_json_file(path);
    std::string kind = io::fixture_kind(doc);
    for (const char* k : kinds)
        if (kind == k) return doc;
    throw input_error("fixture kind \"" + kind + "\" does not belong to this subcommand");
}

std::vector<int> parse_m_list(const std::string& text) {
    std::vector<int> ms;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            ms.push_back(v);
        } catch (const std::exception&) {
            throw input_error("--m expects a comma list of positive integers");
        }
    }
    if (ms.empty()) throw input_error("--m expects a comma list of positive integers");
    return ms;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact boundary-distance diagnostics for one-parameter degenerations"};
    app.require_subcommand(1);

    OutputOptions opts;
    std::string fixture_path, y0_text, big_y_text, m_text = "2,3,4";
    int vmax = 4, emax = 5, gmax = 3;
    bool check_criterion = false;
    std::string pg_components_text;
    long pg_generic = -1;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--report", opts.format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opts.out_path, "write the report to a file");
    };

    CLI::App* mhs = app.add_subcommand("mhs", "validate a limiting mixed Hodge structure fixture");
    mhs->add_option("fixture", fixture_path, "fixture JSON path")->required();
    add_output_flags(mhs);

    CLI::App* metric = app.add_subcommand("metric", "Hodge-norm asymptotics and classification");
    metric->add_option("fixture", fixture_path, "fixture JSON path")->required();
    metric->add_option("--y0", y0_text, "lower endpoint of the vertical path");
    metric->add_option("--Y", big_y_text, "upper endpoint of the vertical path");
    add_output_flags(metric);

    CLI::App* curve = app.add_subcommand("curve", "stable-curve cover-genus diagnostics");
    curve->add_option("fixture", fixture_path, "fixture JSON path, or 'enumerate'")->required();
    curve->add_option("--m", m_text, "comma list of cover levels (default 2,3,4)");
    curve->add_option("--vmax", vmax, "enumeration: max vertices");
    curve->add_option("--emax", emax, "enumeration: max edges");
    curve->add_option("--gmax", gmax, "enumeration: max vertex genus");
    curve->add_flag("--check-theorem-1-4", check_criterion,
                    "verify the three-level smoothability criterion over the enumeration");
    add_output_flags(curve);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "enumerate stable dual graphs");
    enumerate_cmd->add_option("--vmax", vmax, "max vertices");
    enumerate_cmd->add_option("--emax", emax, "max edges");
    enumerate_cmd->add_option("--gmax", gmax, "max vertex genus");
    enumerate_cmd->add_flag("--check-theorem-1-4", check_criterion,
                            "verify the three-level smoothability criterion");
    add_output_flags(enumerate_cmd);

    CLI::App* surgery = app.add_subcommand("surgery", "nodal threefold surgery arithmetic");
    surgery->add_option("fixture", fixture_path, "fixture JSON path")->required();
    add_output_flags(surgery);

    CLI::App* pg = app.add_subcommand("pg", "geometric-genus equality check");
    pg->add_option("fixture", fixture_path, "fixture JSON path");
    pg->add_option("--generic", pg_generic, "generic geometric genus");
    pg->add_option("--components", pg_components_text, "comma list of component genera");
    add_output_flags(pg);

    CLI::App* selftest = app.add_subcommand("selftest", "run the bundled fixture and property suites");
    std::string fault_name;
    selftest->add_option("--inject-fault", fault_name,
                         "dev mode: corrupt the named bundled fixture so its row fails");
    add_output_flags(selftest);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        DiagnosticReport report;
        if (mhs->parsed()) {
            report = handle_mhs(load_fixture(fixture_path, {"lmhs", "metric"}));
        } else if (metric->parsed()) {
            report = handle_metric(load_fixture(fixture_path, {"metric", "lmhs"}), y0_text,
                                   big_y_text);
        } else if (curve->parsed()) {
            if (fixture_path == "enumerate") {
                report = handle_enumerate(vmax, emax, gmax, check_criterion);
            } else {
                report = handle_curve(load_fixture(fixture_path, {"curve"}), parse_m_list(m_text));
            }
        } else if (enumerate_cmd->parsed()) {
            report = handle_enumerate(vmax, emax, gmax, check_criterion);
        } else if (surgery->parsed()) {
            report = handle_surgery(load_fixture(fixture_path, {"surgery"}));
        } else if (pg->parsed()) {
            ComponentGenera data{};
            if (!fixture_path.empty()) {
                data = io::parse_pg_fixture(load_fixture(fixture_path, {"pg"}));
            } else {
                if (pg_generic < 0 || pg_components_text.empty())
                    throw input_error("pg needs a fixture file or --generic with --components");
                std::vector<long> comps;
                std::stringstream ss(pg_components_text);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) comps.push_back(std::stol(tok));
                data = ComponentGenera::make(pg_generic, std::move(comps));
            }
            report = handle_pg(data);
        } else if (selftest->parsed()) {
            report = handle_selftest(fault_name);
        }
        emit(report, opts, out);
        return report.exit_status;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const math_failure& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace degen::cli
