#pragma once

#include <cstdint>
#include <vector>

#include "circsep/geom.hpp"

namespace circsep {

struct EmptyInput : GeometryError {
    EmptyInput() : GeometryError("minimum_enclosing_circle: empty input") {}
};

struct MecResult {
    Circle circle;
    std::vector<int> support;  // 1..3 indices into the input set
};

// Smallest circle enclosing all points. Randomized move-to-front incremental
// with a fixed default seed so runs are reproducible.
MecResult minimum_enclosing_circle(const std::vector<Point>& points, uint64_t seed = 42);

}  // namespace circsep
