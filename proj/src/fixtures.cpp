#include "degen/fixtures.hpp"

#include "degen/errors.hpp"

namespace degen::fixtures {

namespace {

std::vector<BundledFixture> build() {
    std::vector<BundledFixture> fx;

    // One-parameter degeneration of elliptic-curve type: N e2 = -e1,
    // the top Hodge vector e2 is moved by the monodromy (infinite distance).
    fx.push_back({"elliptic", "metric", R"({
  "schema": "degen/1",
  "kind": "metric",
  "weight": 1,
  "Q": [["0", "1"], ["-1", "0"]],
  "N": [["0", "-1"], ["0", "0"]],
  "F": {"1": [["0", "1"]]},
  "frame": [["0", "1"]]
})"});

    // Pure weight-1 Hodge structure, trivial monodromy (finite distance).
    fx.push_back({"pure", "metric", R"({
  "schema": "degen/1",
  "kind": "metric",
  "weight": 1,
  "Q": [["0", "1"], ["-1", "0"]],
  "N": [["0", "0"], ["0", "0"]],
  "F": {"1": [[{"re": "1"}, {"im": "1"}]]},
  "frame": [[{"re": "1"}, {"im": "1"}]]
})"});

    // Direct sum of two elliptic-type blocks: p(y) = 4y^2.
    fx.push_back({"two_block", "metric", R"({
  "schema": "degen/1",
  "kind": "metric",
  "weight": 1,
  "Q": [["0", "1", "0", "0"], ["-1", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "-1", "0"]],
  "N": [["0", "-1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "0", "0"]],
  "F": {"1": [["0", "1", "0", "0"], ["0", "0", "0", "1"]]},
  "frame": [["0", "1", "0", "0"], ["0", "0", "0", "1"]]
})"});

    // Nodal Calabi-Yau threefold shape: one vanishing-cycle block (nonzero N)
    // plus the holomorphic volume class, which N annihilates. Finite distance
    // with nontrivial monodromy.
    fx.push_back({"conifold", "metric", R"({
  "schema": "degen/1",
  "kind": "metric",
  "weight": 3,
  "Q": [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "-1", "0"]],
  "N": [["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]],
  "F": {
    "1": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", {"im": "-1"}]],
    "2": [["0", "1", "0", "0"], ["0", "0", "1", {"im": "-1"}]],
    "3": [["0", "0", "1", {"im": "-1"}]]
  },
  "frame": [["0", "0", "1", {"im": "-1"}]]
})"});

    // The elliptic-type structure again, as a full mixed-Hodge fixture with
    // the weight filtration spelled out for validation.
    fx.push_back({"mhs_elliptic", "lmhs", R"({
  "schema": "degen/1",
  "kind": "lmhs",
  "weight": 1,
  "Q": [["0", "1"], ["-1", "0"]],
  "N": [["0", "-1"], ["0", "0"]],
  "F": {"1": [["0", "1"]]},
  "W": {"0": [["1", "0"]], "1": [["1", "0"]], "2": [["1", "0"], ["0", "1"]]}
})"});

    // Stable tree: genus 2 and genus 1 components joined at one node. The
    // first cover metric misses the node, the second detects it.
    fx.push_back({"tree", "curve", R"({
  "schema": "degen/1",
  "kind": "curve",
  "vertices": [{"genus": 2}, {"genus": 1}],
  "edges": [[0, 1]],
  "generic_genus": 3
})"});

    // Irreducible genus-0 component with two self-nodes (loops); arithmetic
    // genus 2. Exercises the loop branch-count convention.
    fx.push_back({"two_loop", "curve", R"({
  "schema": "degen/1",
  "kind": "curve",
  "vertices": [{"genus": 0}],
  "edges": [[0, 0], [0, 0]],
  "generic_genus": 2
})"});

    // Quintic-like nodal threefold with one node whose exceptional class
    // already dies in homology (rho = 1).
    fx.push_back({"surgery_one_node", "surgery", R"({
  "schema": "degen/1",
  "kind": "surgery",
  "betti_X": [1, 0, 1, 202, 1, 0, 1],
  "nodes": 1,
  "relation_rank": 1
})"});

    // Calabi-Yau boundary bookkeeping: exactly one component keeps the
    // volume form.
    fx.push_back({"pg_cy", "pg", R"({
  "schema": "degen/1",
  "kind": "pg",
  "generic": 1,
  "components": [1, 0, 0]
})"});

    return fx;
}

} // namespace

const std::vector<BundledFixture>& all() {
    static const std::vector<BundledFixture> fx = build();
    return fx;
}

const BundledFixture& by_name(const std::string& name) {
    for (const auto& f : all())
        if (f.name == name) return f;
    throw input_error("no bundled fixture named " + name);
}

} // namespace degen::fixtures
