#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

// Planar geometric primitives shared by the whole library.
//
// Arithmetic is plain double with a global absolute tolerance EPS_GEOM,
// applied after normalizing by the input scale. The orientation predicate
// additionally recomputes in extended precision when the determinant falls
// below an error-bound filter, which removes sign errors where they matter
// (hull construction, tangent walks, region location).

namespace circsep {

inline constexpr double EPS_GEOM = 1e-9;

// Recommended coordinate magnitude for ingested data; enforced by the CLI.
inline constexpr double COORD_LIMIT = 1e6;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : GeometryError {
    DegenerateTriangle() : GeometryError("circumcenter: collinear points") {}
};
struct CoincidentPoints : GeometryError {
    CoincidentPoints() : GeometryError("bisector: coincident points") {}
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double dist2(Point a, Point b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}
// CCW rotation by 90 degrees.
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point normalized(Point a) {
    double n = norm(a);
    if (n == 0.0) throw GeometryError("normalized: zero vector");
    return {a.x / n, a.y / n};
}

struct Segment {
    Point a;
    Point b;
};

// A line with a travel direction; the left side of travel is the canonical
// "P side" everywhere in this library.
struct DirectedLine {
    Point anchor;
    Point direction;  // unit vector

    static DirectedLine through(Point anchor, Point dir) {
        return {anchor, normalized(dir)};
    }
};

struct Circle {
    Point center;
    double radius = 0.0;
};

enum class Orientation { CCW, CW, COLLINEAR };

// Sign of the doubled signed area of triangle abc. Near-zero determinants are
// recomputed in long double before declaring collinearity.
Orientation orientation(Point a, Point b, Point c);

// Raw doubled signed area, extended-precision when the double result is
// below the error-bound filter.
double orientation_value(Point a, Point b, Point c);

// Sign of the farthest-point in-circle test: positive when d lies strictly
// outside the circumcircle of CCW triangle abc. `magnitude` receives the
// term-magnitude sum for thresholding near-cocircular cases.
double outcircle_value(Point a, Point b, Point c, Point d, double* magnitude = nullptr);

Point circumcenter(Point a, Point b, Point c);

double dist_point_segment(Point p, const Segment& s);

// Signed distance; positive on the left (P) side of l.
double dist_point_line(Point p, const DirectedLine& l);

// Foot of the perpendicular from p onto the line through l.
Point project_on_line(Point p, const DirectedLine& l);

// Closest point of the closed segment s to p.
Point closest_on_segment(Point p, const Segment& s);

// Perpendicular bisector of [p, p2], directed so that walking it keeps p on
// the right (direction = segment vector rotated clockwise).
DirectedLine bisector(Point p, Point p2);

using TangencyFeature = std::variant<Point, Segment, Circle>;

// All parameters t on the bisector of (p, p2) where the P-circle centered at
// bisector_point(t) is tangent to the feature. Centers are anchored at the
// midpoint of [p, p2]: center(t) = mid + t * dir. At most two roots.
// For a Segment feature, roots whose tangency foot falls outside the segment
// are rejected (callers then solve the endpoints as Point features).
std::vector<double> tangency_roots(Point p, Point p2, const TangencyFeature& feature);

// Roots t where the P-circle centered at bisector_point(t) is tangent to the
// full line l (no segment clipping). At most two roots.
std::vector<double> line_tangency_roots(Point p, Point p2, const DirectedLine& l);

struct TangencySolution {
    Point center;
    double radius;
    double t;        // bisector parameter
    Point touch;     // tangency point on the feature
};

// Smallest-radius tangency in [t0, t1] (t1 may be +infinity); absent when no
// root lies in range.
std::optional<TangencySolution> solve_tangency_on_bisector(
    Point p, Point p2, double t0, double t1, const TangencyFeature& feature);

// Point on bisector(p, p2) at parameter t (midpoint anchored).
Point bisector_point(Point p, Point p2, double t);

// Parameter of a point known to lie on bisector(p, p2).
double bisector_param(Point p, Point p2, Point on_bisector);

}  // namespace circsep
