#pragma once

#include <optional>

#include "circsep/convex.hpp"
#include "circsep/fpvd.hpp"
#include "circsep/path_index.hpp"

// Query algorithms: minimum P-circle whose open interior avoids a query
// point, circle, or convex polygon. Point/circle queries run in O(log n);
// polygon queries interleave a root-path search with a halving search on the
// facing chain of the polygon, O(log n + log m).

namespace circsep {

struct SeedFailure : GeometryError {
    SeedFailure() : GeometryError("find_seed: constructed circle is not separating") {}
};
struct InvariantBroken : GeometryError {
    InvariantBroken() : GeometryError("dual search: interval invariant violated") {}
};
struct NoRoot : GeometryError {
    NoRoot() : GeometryError("finalize: no tangency root in the final interval") {}
};

// Deterministic tie-break: angular perturbation applied to the separating
// line direction when two hull vertices are equally close to it.
inline constexpr double EPS_TIE = 1e-7;

enum class QueryStatus { SEPARATING, NO_SEPARATING_CIRCLE };

struct QueryStats {
    int path_steps = 0;
    int chain_steps = 0;
};

struct QueryResult {
    QueryStatus status = QueryStatus::NO_SEPARATING_CIRCLE;
    Circle circle;                  // valid when SEPARATING
    std::optional<Point> tangency;  // touch point on Q; absent on strict gap
    bool trivial_mec = false;       // answer is the minimum enclosing circle
    QueryStats stats;
};

QueryResult query_point(const FpvdTree& tree, const PathLocator& loc, Point q);
QueryResult query_circle(const FpvdTree& tree, const PathLocator& loc, const Circle& q);
QueryResult query_polygon(const FpvdTree& tree, const PathLocator& loc,
                          const ConvexPolygon& q);

// Separating point s on the diagram: walk from the hull vertex closest to the
// separating line (P on its left) along the perpendicular, away from the
// line, to the boundary of that vertex's region. C(s) is separating.
DiagramLocation find_seed(const FpvdTree& tree, const DirectedLine& sep_line);

}  // namespace circsep
