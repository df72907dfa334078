#pragma once

#include <string>

namespace degen {

/// Whether the puncture sits at finite or infinite distance from the
/// generic fiber under the Hodge metric.
enum class DistanceClass {
    FiniteDistance,
    InfiniteDistance,
};

inline std::string to_string(DistanceClass c) {
    return c == DistanceClass::FiniteDistance ? "finite" : "infinite";
}

} // namespace degen
