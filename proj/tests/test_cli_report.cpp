#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/cli.hpp"
#include "degen/errors.hpp"
#include "degen/fixtures.hpp"
#include "degen/json_io.hpp"
#include "degen/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace degen;
using nlohmann::json;

namespace {

std::string fixture(const char* name) {
    return std::string(DEGEN_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("metric subcommand on the elliptic fixture") {
    RunResult r = run_cli({"metric", fixture("elliptic.json")});
    CHECK(r.status == 0);
    CHECK(r.out.find("2*y") != std::string::npos);
    CHECK(r.out.find("infinite distance") != std::string::npos);
    CHECK(r.out.find("1/4") != std::string::npos); // Poincare limit
}

TEST_CASE("metric with a vertical length request") {
    RunResult r = run_cli({"metric", fixture("elliptic.json"), "--y0", "1", "--Y", "1000",
                           "--report", "json"});
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["evidence"]["vertical_length"]["y0"] == "1");
    double value = doc["evidence"]["vertical_length"]["value"].get<double>();
    CHECK(std::fabs(value - 0.5 * std::log(1000.0)) < 1e-8);
    SUBCASE("half-specified paths are rejected") {
        CHECK(run_cli({"metric", fixture("elliptic.json"), "--y0", "1"}).status == 2);
    }
}

TEST_CASE("mhs subcommand validates and reports axioms") {
    RunResult good = run_cli({"mhs", fixture("mhs_elliptic.json"), "--report", "json"});
    CHECK(good.status == 0);
    json doc = json::parse(good.out);
    CHECK(doc["verdicts"]["valid_polarized_lmhs"] == true);
    bool saw_positivity = false;
    for (const auto& axiom : doc["evidence"]["axioms"]) {
        CHECK(axiom["pass"] == true);
        if (axiom["name"] == "polarization.positivity.l1") saw_positivity = true;
    }
    CHECK(saw_positivity);
}

TEST_CASE("structural violations exit with code 2") {
    RunResult r = run_cli({"mhs", fixture("bad_q.json")});
    CHECK(r.status == 2);
    CHECK(r.err.find("Q^T") != std::string::npos);
}

TEST_CASE("axiom failures exit with code 1 and skip the asymptotics") {
    RunResult r = run_cli({"metric", fixture("impure.json"), "--report", "json"});
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["verdicts"]["valid_polarized_lmhs"] == false);
    CHECK_FALSE(doc["evidence"].contains("p"));
    bool witnessed = false;
    for (const auto& axiom : doc["evidence"]["axioms"])
        if (axiom["name"] == "purity.k2") {
            CHECK(axiom["pass"] == false);
            witnessed = axiom.contains("witness");
        }
    CHECK(witnessed);
}

TEST_CASE("curve subcommand reports residuals and smoothability") {
    RunResult r = run_cli({"curve", fixture("tree.json"), "--m", "1,2,3", "--report", "json"});
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["evidence"]["per_m"][0]["residual"] == 0);
    CHECK(doc["evidence"]["per_m"][1]["residual"] == 1);
    CHECK(doc["evidence"]["per_m"][2]["residual"] == 2);
    std::string verdict = doc["verdicts"]["smoothable"].get<std::string>();
    CHECK(verdict.rfind("no", 0) == 0);
}

TEST_CASE("surgery subcommand") {
    RunResult r = run_cli({"surgery", fixture("surgery_one_node.json"), "--report", "json"});
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["evidence"]["betti_X_s"][3] == 204);
    CHECK(doc["evidence"]["betti_X_0"][3] == 203);
    CHECK(doc["verdicts"]["global_smoothing_possible"] == true);
    REQUIRE(doc["warnings"].size() > 0);
}

TEST_CASE("pg subcommand accepts flags or a fixture") {
    CHECK(run_cli({"pg", fixture("pg_cy.json")}).status == 0);
    RunResult r = run_cli({"pg", "--generic", "3", "--components", "1,1,1", "--report", "json"});
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["verdicts"]["classification"] == "finite distance");
    SUBCASE("invariant-violating inputs exit 2") {
        CHECK(run_cli({"pg", "--generic", "1", "--components", "1,1"}).status == 2);
    }
}

TEST_CASE("enumerate subcommand counts canonical models") {
    RunResult r = run_cli({"enumerate", "--vmax", "2", "--emax", "2", "--gmax", "2",
                           "--check-theorem-1-4", "--report", "json"});
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["evidence"]["models"] == 18);
    CHECK(doc["evidence"]["counterexamples"] == 0);
    SUBCASE("the curve subcommand accepts 'enumerate' as its positional") {
        RunResult alias = run_cli({"curve", "enumerate", "--vmax", "2", "--emax", "2",
                                   "--gmax", "2", "--report", "json"});
        CHECK(alias.status == 0);
        CHECK(json::parse(alias.out)["evidence"]["models"] == 18);
    }
}

TEST_CASE("bad invocations exit with code 2") {
    CHECK(run_cli({"frobnicate"}).status == 2);
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"metric", "/nonexistent/file.json"}).status == 2);
    CHECK(run_cli({"curve", fixture("tree.json"), "--m", "0,1"}).status == 2);
    CHECK(run_cli({"curve", fixture("tree.json"), "--m", "a,b"}).status == 2);
    CHECK(run_cli({"surgery", fixture("tree.json")}).status == 2); // wrong kind
    CHECK(run_cli({"metric", fixture("pg_cy.json")}).status == 2);
}

TEST_CASE("reports are byte-identical across runs and write to files") {
    std::string path_a = "/tmp/degen_test_cli_report_a.json";
    std::string path_b = "/tmp/degen_test_cli_report_b.json";
    RunResult a = run_cli({"metric", fixture("elliptic.json"), "--report", "json", "--out", path_a});
    RunResult b = run_cli({"metric", fixture("elliptic.json"), "--report", "json", "--out", path_b});
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    std::string bytes_a = slurp(path_a);
    std::string bytes_b = slurp(path_b);
    CHECK(!bytes_a.empty());
    CHECK(bytes_a == bytes_b);
    std::remove(path_a.c_str());
    std::remove(path_b.c_str());
}

TEST_CASE("diagnostic reports round-trip through JSON") {
    RunResult r = run_cli({"surgery", fixture("surgery_one_node.json"), "--report", "json"});
    json doc = json::parse(r.out);
    DiagnosticReport parsed = DiagnosticReport::from_json(doc);
    CHECK(parsed.to_json() == doc);
    CHECK(parsed.subject == "surgery");
}

TEST_CASE("fixture parsing rejects malformed documents") {
    json good = json::parse(fixtures::by_name("elliptic").json_text);

    SUBCASE("wrong schema") {
        json doc = good;
        doc["schema"] = "degen/2";
        CHECK_THROWS_AS(io::fixture_kind(doc), input_error);
    }
    SUBCASE("missing Hodge step") {
        json doc = good;
        doc["weight"] = 2; // F must now provide steps 1 and 2
        CHECK_THROWS_AS(io::parse_lmhs_fixture(doc), input_error);
    }
    SUBCASE("filtration vector of wrong length") {
        json doc = good;
        doc["F"]["1"] = json::array({json::array({"0", "1", "0"})});
        CHECK_THROWS_AS(io::parse_lmhs_fixture(doc), input_error);
    }
    SUBCASE("weight filtration step out of range") {
        json doc = good;
        doc["W"] = json{{"0", json::array()},
                        {"1", json::array()},
                        {"2", json::array({json::array({"1", "0"}), json::array({"0", "1"})})},
                        {"7", json::array()}};
        CHECK_THROWS_AS(io::parse_lmhs_fixture(doc), input_error);
    }
    SUBCASE("complex entries in Q") {
        json doc = good;
        doc["Q"][0][1] = json{{"re", "1"}, {"im", "1"}};
        CHECK_THROWS_AS(io::parse_lmhs_fixture(doc), input_error);
    }
    SUBCASE("ragged matrix") {
        json doc = good;
        doc["N"][0] = json::array({"0"});
        CHECK_THROWS_AS(io::parse_lmhs_fixture(doc), input_error);
    }
    SUBCASE("curve edge out of range") {
        json doc = json::parse(fixtures::by_name("tree").json_text);
        doc["edges"][0][1] = 5;
        CHECK_THROWS_AS(io::parse_curve_fixture(doc), input_error);
    }
    SUBCASE("disconnected curve") {
        json doc = json::parse(fixtures::by_name("tree").json_text);
        doc["edges"] = json::array();
        CHECK_THROWS_AS(io::parse_curve_fixture(doc), input_error);
    }
}

TEST_CASE("bundled fixtures parse and carry matching kinds") {
    for (const auto& fx : fixtures::all()) {
        json doc = json::parse(fx.json_text);
        CHECK(io::fixture_kind(doc) == fx.kind);
    }
    CHECK_THROWS_AS(fixtures::by_name("nope"), input_error);
}

TEST_CASE("selftest passes on a fresh build") {
    RunResult r = run_cli({"selftest", "--report", "json"});
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["verdicts"]["all_pass"] == true);
    for (const auto& row : doc["evidence"]["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("selftest fault injection flips exactly the corrupted row") {
    RunResult r = run_cli({"selftest", "--inject-fault", "surgery_one_node", "--report", "json"});
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["verdicts"]["all_pass"] == false);
    int failed = 0;
    for (const auto& row : doc["evidence"]["rows"]) {
        if (row["pass"] == false) {
            ++failed;
            std::string name = row["name"].get<std::string>();
            CHECK(name.find("surgery_one_node") != std::string::npos);
        }
    }
    CHECK(failed == 1);
}
