#pragma once

#include <variant>
#include <vector>

#include "circsep/engine.hpp"

// Brute-force references, enumeration-based and independent of the tree and
// query code paths. Test-scale only (n <= 64, m <= 32).

namespace circsep::oracle {

struct Degenerate : GeometryError {
    Degenerate() : GeometryError("brute_fpvd: collinear input") {}
};

struct BruteNode {
    Point position;
    std::vector<int> sites;  // hull-vertex indices, sorted
};

// All farthest-point Voronoi nodes of P by exhaustive triple enumeration:
// circumcenters whose circumcircle has no site strictly outside. Cocircular
// triples sharing a center are merged. Site indices refer to convex_hull(P).
std::vector<BruteNode> brute_fpvd(const std::vector<Point>& points);

// Minimum enclosing circle by enumerating diametral pairs and triples.
Circle brute_mec(const std::vector<Point>& points);

using QueryObject = std::variant<Point, Circle, ConvexPolygon>;

// Minimum separating circle by candidate enumeration: the minimum enclosing
// circle, plus every tangency of a circle through a hull site pair with every
// feature of Q, over the full bisector line. Candidates must enclose P and
// their open disk must miss Q.
QueryResult brute_min_separating_circle(const std::vector<Point>& points,
                                        const QueryObject& q);

}  // namespace circsep::oracle
