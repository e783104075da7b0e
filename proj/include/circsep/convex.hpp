#pragma once

#include <optional>
#include <vector>

#include "circsep/geom.hpp"

// Convex polygon representation plus the boundary searches the query phase
// needs: containment, distance, extreme vertex, separating line, internal
// tangents and the clockwise chain between two boundary points.
//
// Polygons with 1 or 2 vertices are legal; point and circle queries reuse the
// polygon code paths through them. Binary searches kick in above
// LINEAR_SCAN_CUTOFF vertices and certify their answer with O(1) local
// checks, falling back to a linear scan when the certificate fails.

namespace circsep {

struct NotConvex : GeometryError {
    NotConvex() : GeometryError("make_polygon: cleaned cycle is not convex") {}
};
struct PointNotOutside : GeometryError {
    PointNotOutside() : GeometryError("distance_point: point not strictly outside") {}
};
struct PolygonsIntersect : GeometryError {
    PolygonsIntersect() : GeometryError("internal_tangents: interiors intersect") {}
};
struct PointNotOnBoundary : GeometryError {
    PointNotOnBoundary() : GeometryError("chain_between: point not on boundary") {}
};

enum class Containment { INSIDE, BOUNDARY, OUTSIDE };

inline constexpr int LINEAR_SCAN_CUTOFF = 16;

class ConvexPolygon {
  public:
    ConvexPolygon() = default;

    // Vertices in CCW order, strictly convex, starting at the
    // lexicographically smallest vertex.
    const std::vector<Point>& vertices() const { return verts_; }
    int size() const { return (int)verts_.size(); }
    const Point& operator[](int i) const { return verts_[i]; }
    Point vertex_mod(int i) const { return verts_[((i % size()) + size()) % size()]; }

    // Max coordinate magnitude (>= 1), cached so per-query tolerance scaling
    // stays O(1) even on huge hulls.
    double coord_scale() const { return scale_; }

    static ConvexPolygon unchecked(std::vector<Point> ccw_vertices);

  private:
    std::vector<Point> verts_;
    double scale_ = 1.0;
};

// Validates/cleans an input vertex cycle: either orientation accepted,
// collinear interior vertices collapsed, duplicates dropped. Throws NotConvex.
ConvexPolygon make_polygon(const std::vector<Point>& points);

// Monotone-chain convex hull of an arbitrary point set (strictly convex
// output; collinear sets give a 2-gon or 1-gon). Also reports, for each hull
// vertex, an index of a realizing input point.
ConvexPolygon convex_hull(const std::vector<Point>& points,
                          std::vector<int>* source_indices = nullptr);

Containment contains_point(const ConvexPolygon& q, Point p);

struct DistanceResult {
    double distance = 0.0;
    bool on_vertex = false;
    int feature = 0;  // vertex index, or edge index (edge i = [v_i, v_{i+1}])
    Point closest;
};

// Distance from a point strictly outside q to its boundary. Throws
// PointNotOutside otherwise.
DistanceResult distance_point(const ConvexPolygon& q, Point p);

// Index of the vertex maximizing dot(vertex, dir); ties break to the lower
// stored index.
int extreme_vertex(const ConvexPolygon& q, Point dir);

// A line with a strictly on its left and b weakly on its right; absent when
// the interiors overlap. Any valid separator may be returned.
std::optional<DirectedLine> separating_line(const ConvexPolygon& a, const ConvexPolygon& b);

// Distance between two convex polygons (0 when they touch or overlap) with
// witness points. Used by separating_line and the engine prechecks.
struct PolygonGap {
    double distance = 0.0;   // max over directions of the support margin;
                             // negative means the interiors overlap
    Point witness_a;
    Point witness_b;
};
PolygonGap polygon_gap(const ConvexPolygon& a, const ConvexPolygon& b);

struct InternalTangents {
    DirectedLine first;   // the tangent whose clockwise chain on b faces a
    DirectedLine second;
    Point q_first;        // tangency points on b
    Point q_second;
};

// The two internal tangents of disjoint convex polygons. Throws
// PolygonsIntersect when the interiors overlap.
InternalTangents internal_tangents(const ConvexPolygon& a, const ConvexPolygon& b);

// Clockwise boundary walk of q from `from` to `to`; both must lie on the
// boundary (vertices or interior edge points). Endpoints inside an edge
// become chain vertices.
std::vector<Point> chain_between(const ConvexPolygon& q, Point from, Point to);

// True iff the open disk of c misses q (tangency counts as disjoint).
bool circle_polygon_disjoint(const Circle& c, const ConvexPolygon& q);

struct ChainInterval {
    int a = 0;
    int b = 0;
};

}  // namespace circsep
