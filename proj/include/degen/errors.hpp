#pragma once

#include <stdexcept>
#include <string>

namespace degen {

// Malformed or inconsistent input: bad fixture schema, violated structural
// invariants, preconditions on user-supplied data. CLI exit code 2.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical consistency check failed at runtime (e.g. two routes to the
// same quantity disagree). CLI exit code 1.
class math_failure : public std::runtime_error {
public:
    explicit math_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace degen
