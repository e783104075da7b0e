#pragma once

#include <string>

#include "circsep/oracle.hpp"

// Deterministic SVG figures for query results: P as dots, hull(P), the query
// object, the answer circle, and the tangency point. Fixed 800x800 viewport
// auto-scaled to the scene bounding box with a 5% margin.

namespace circsep::svg {

inline constexpr int VIEWPORT = 800;
inline constexpr double MARGIN_FRACTION = 0.05;

std::string render_query(const FpvdTree& tree, const oracle::QueryObject& q,
                         const QueryResult& res);

}  // namespace circsep::svg
