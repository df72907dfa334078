#include "degen/json_io.hpp"

#include "degen/errors.hpp"

#include <fstream>

namespace degen::io {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open fixture file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

std::string fixture_kind(const json& doc) {
    if (!doc.is_object()) throw input_error("fixture must be a JSON object");
    if (doc.contains("schema")) {
        if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kSchema)
            throw input_error("unsupported fixture schema; expected \"degen/1\"");
    }
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw input_error("fixture is missing its \"kind\"");
    return doc["kind"].get<std::string>();
}

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw input_error("rational entries must be integers or \"p/q\" strings");
}

GaussianRational parse_gaussian(const json& j) {
    if (j.is_object()) {
        GaussianRational z;
        if (j.contains("re")) z.re = parse_rational(j["re"]);
        if (j.contains("im")) z.im = parse_rational(j["im"]);
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "re" && key != "im")
                throw input_error("complex entries allow only \"re\" and \"im\"");
        }
        return z;
    }
    return GaussianRational(parse_rational(j));
}

std::vector<GaussianRational> parse_vector(const json& j) {
    if (!j.is_array()) throw input_error("vector must be a JSON array");
    std::vector<GaussianRational> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(parse_gaussian(e));
    return v;
}

ExactMatrix parse_matrix(const json& j, bool require_real) {
    if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
    if (cols == 0) throw input_error("matrix rows must be nonempty arrays");
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw input_error("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_gaussian(row.at(c));
    }
    if (require_real && !m.is_real()) throw input_error("matrix entries must be real rational");
    return m;
}

json rational_to_json(const Rational& r) { return r.str(); }

json gaussian_to_json(const GaussianRational& z) {
    return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

json vector_to_json(const std::vector<GaussianRational>& v) {
    json arr = json::array();
    for (const auto& z : v) arr.push_back(gaussian_to_json(z));
    return arr;
}

json matrix_to_json(const ExactMatrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gaussian_to_json(m(i, j)));
        arr.push_back(row);
    }
    return arr;
}

json subspace_to_json(const Subspace& s) {
    json arr = json::array();
    for (std::size_t j = 0; j < s.dim(); ++j) arr.push_back(vector_to_json(s.basis().col(j)));
    return arr;
}

json polynomial_to_json(const Polynomial& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(gaussian_to_json(p.coeff(static_cast<std::size_t>(k))));
    return arr;
}

namespace {

std::vector<Subspace> parse_filtration_steps(const json& obj, std::size_t ambient, long lo, long hi,
                                             const std::string& what) {
    if (!obj.is_object()) throw input_error(what + " must be an object keyed by step index");
    std::vector<Subspace> steps;
    for (long idx = lo; idx <= hi; ++idx) {
        std::string key = std::to_string(idx);
        if (!obj.contains(key)) throw input_error(what + " is missing step " + key);
        const auto& cols = obj[key];
        if (!cols.is_array()) throw input_error(what + " step " + key + " must be an array of columns");
        std::vector<std::vector<GaussianRational>> vectors;
        for (const auto& c : cols) {
            auto v = parse_vector(c);
            if (v.size() != ambient)
                throw input_error(what + " step " + key + " has a vector of wrong length");
            vectors.push_back(std::move(v));
        }
        steps.push_back(Subspace::span_of(ambient, vectors));
    }
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool numeric = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos;
        if (!numeric) throw input_error(what + " has a non-numeric step key: " + key);
        long idx = std::stol(key);
        if (idx < lo || idx > hi)
            throw input_error(what + " step " + key + " is out of range");
    }
    return steps;
}

} // namespace

LmhsFixtureDoc parse_lmhs_fixture(const json& doc) {
    for (const char* field : {"weight", "Q", "N", "F"})
        if (!doc.contains(field)) throw input_error(std::string("fixture is missing \"") + field + "\"");
    if (!doc["weight"].is_number_integer() || doc["weight"].get<long>() < 0)
        throw input_error("\"weight\" must be a nonnegative integer");
    const unsigned weight = doc["weight"].get<unsigned>();

    ExactMatrix q = parse_matrix(doc["Q"], /*require_real=*/true);
    ExactMatrix n = parse_matrix(doc["N"], /*require_real=*/true);
    const std::size_t dim = q.rows();
    if (n.rows() != dim || n.cols() != dim || q.cols() != dim)
        throw input_error("\"Q\" and \"N\" must be square matrices of the same size");

    // F^1..F^n supplied; F^0 defaults to the full space.
    HodgeFiltration f;
    f.ambient = dim;
    f.steps.push_back(Subspace::full(dim));
    if (weight > 0) {
        auto upper = parse_filtration_steps(doc["F"], dim, 1, static_cast<long>(weight),
                                            "Hodge filtration");
        if (doc["F"].contains("0")) {
            auto zero_step = parse_filtration_steps(doc["F"], dim, 0, 0, "Hodge filtration");
            f.steps[0] = zero_step[0];
        }
        for (auto& s : upper) f.steps.push_back(std::move(s));
    }

    std::optional<WeightFiltration> w;
    if (doc.contains("W")) {
        WeightFiltration wf;
        wf.center = weight;
        wf.steps = parse_filtration_steps(doc["W"], dim, 0, 2L * weight, "weight filtration");
        w = std::move(wf);
    }

    LmhsFixtureDoc out;
    PolarizedLattice lattice{dim, weight, std::move(q)};
    out.lmhs = make_lmhs(std::move(lattice), std::move(n), std::move(f), std::move(w));

    if (doc.contains("frame")) {
        if (!doc["frame"].is_array()) throw input_error("\"frame\" must be an array of vectors");
        for (const auto& c : doc["frame"]) out.frame.push_back(parse_vector(c));
        out.frame_supplied = true;
    } else {
        Subspace top = out.lmhs.F.step(static_cast<long>(weight));
        for (std::size_t j = 0; j < top.dim(); ++j) out.frame.push_back(top.basis().col(j));
    }
    return out;
}

CurveFixtureDoc parse_curve_fixture(const json& doc) {
    if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty())
        throw input_error("curve fixture needs a nonempty \"vertices\" array");
    DualGraph graph;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("genus") || !v["genus"].is_number_integer() ||
            v["genus"].get<long>() < 0)
            throw input_error("each vertex must be {\"genus\": <nonnegative integer>}");
        graph.genus.push_back(v["genus"].get<int>());
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw input_error("\"edges\" must be an array of pairs");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw input_error("each edge must be a pair of vertex indices");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || b < 0 || a >= static_cast<int>(graph.genus.size()) ||
                b >= static_cast<int>(graph.genus.size()))
                throw input_error("edge endpoint out of range");
            graph.edges.emplace_back(a, b);
        }
    }
    graph.normalize_edges();
    if (!graph.connected()) throw input_error("curve fixture: dual graph must be connected");

    CurveFixtureDoc out;
    out.model.graph = std::move(graph);
    if (doc.contains("generic_genus")) {
        if (!doc["generic_genus"].is_number_integer())
            throw input_error("\"generic_genus\" must be an integer");
        out.model.generic_genus = doc["generic_genus"].get<int>();
        out.genus_supplied = true;
    } else {
        out.model.generic_genus = genus_formula(out.model.graph);
    }
    if (out.model.generic_genus < 2)
        throw input_error("curve fixture: generic genus must be >= 2");
    return out;
}

SurgeryDatum parse_surgery_fixture(const json& doc) {
    for (const char* field : {"betti_X", "nodes", "relation_rank"})
        if (!doc.contains(field)) throw input_error(std::string("surgery fixture is missing \"") + field + "\"");
    const auto& betti = doc["betti_X"];
    if (!betti.is_array() || betti.size() != 7)
        throw input_error("\"betti_X\" must list b_0..b_6");
    std::array<long, 7> b{};
    for (int i = 0; i < 7; ++i) {
        if (!betti[i].is_number_integer()) throw input_error("Betti numbers must be integers");
        b[static_cast<std::size_t>(i)] = betti[i].get<long>();
    }
    if (!doc["nodes"].is_number_integer() || !doc["relation_rank"].is_number_integer())
        throw input_error("\"nodes\" and \"relation_rank\" must be integers");
    return SurgeryDatum::make(b, doc["nodes"].get<long>(), doc["relation_rank"].get<long>());
}

ComponentGenera parse_pg_fixture(const json& doc) {
    if (!doc.contains("generic") || !doc["generic"].is_number_integer())
        throw input_error("pg fixture needs an integer \"generic\"");
    if (!doc.contains("components") || !doc["components"].is_array())
        throw input_error("pg fixture needs a \"components\" array");
    std::vector<long> comps;
    for (const auto& c : doc["components"]) {
        if (!c.is_number_integer()) throw input_error("component genera must be integers");
        comps.push_back(c.get<long>());
    }
    return ComponentGenera::make(doc["generic"].get<long>(), std::move(comps));
}

} // namespace degen::io
