#pragma once

#include "degen/curve.hpp"
#include "degen/lmhs.hpp"
#include "degen/metric.hpp"
#include "degen/surgery.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace degen::io {

using nlohmann::json;

inline constexpr const char* kSchema = "degen/1";

json load_json_file(const std::string& path);

/// Fixture kind from the "kind" field; validates "schema" when present.
std::string fixture_kind(const json& doc);

// -- scalar/matrix encoding -------------------------------------------------
// Rationals travel as "p/q" strings (or JSON integers on input); Gaussian
// rationals as {"re": "p/q", "im": "p/q"}; matrices as row-major arrays.

Rational parse_rational(const json& j);
GaussianRational parse_gaussian(const json& j);
std::vector<GaussianRational> parse_vector(const json& j);
ExactMatrix parse_matrix(const json& j, bool require_real);

json rational_to_json(const Rational& r);
json gaussian_to_json(const GaussianRational& z);
json vector_to_json(const std::vector<GaussianRational>& v);
json matrix_to_json(const ExactMatrix& m);
json subspace_to_json(const Subspace& s);          // list of basis columns
json polynomial_to_json(const Polynomial& p);      // ascending coefficients

// -- fixtures -----------------------------------------------------------------

struct LmhsFixtureDoc {
    LimitingMixedHodge lmhs;
    std::vector<std::vector<GaussianRational>> frame; // possibly defaulted to F^n basis
    bool frame_supplied = false;
};

/// Payload for kinds "lmhs" and "metric": {"weight", "Q", "N", "F", "W"?, "frame"?}.
LmhsFixtureDoc parse_lmhs_fixture(const json& doc);

struct CurveFixtureDoc {
    StableModel model;
    bool genus_supplied = false;
};

/// Payload {"vertices": [{"genus": g}...], "edges": [[a,b]...], "generic_genus"?}.
CurveFixtureDoc parse_curve_fixture(const json& doc);

/// Payload {"betti_X": [b0..b6], "nodes": k, "relation_rank": rho}.
SurgeryDatum parse_surgery_fixture(const json& doc);

/// Payload {"generic": p_g, "components": [..]}.
ComponentGenera parse_pg_fixture(const json& doc);

} // namespace degen::io
