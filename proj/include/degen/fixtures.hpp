#pragma once

#include <string>
#include <vector>

namespace degen::fixtures {

struct BundledFixture {
    std::string name;      // file-style name, e.g. "elliptic"
    std::string kind;      // fixture kind
    std::string json_text; // complete fixture document
};

/// The fixture suite shipped inside the binary; selftest runs all of them.
const std::vector<BundledFixture>& all();

/// Lookup by name; throws input_error when absent.
const BundledFixture& by_name(const std::string& name);

} // namespace degen::fixtures
