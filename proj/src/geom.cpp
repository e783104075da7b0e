#include "circsep/geom.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>

namespace circsep {

namespace {

// Relative error filter for a 2x2 difference determinant in double.
constexpr double DET_FILTER = 8.0 * std::numeric_limits<double>::epsilon();

double det2_filtered(Point a, Point b, Point c) {
    double acx = a.x - c.x, acy = a.y - c.y;
    double bcx = b.x - c.x, bcy = b.y - c.y;
    double det = acx * bcy - acy * bcx;
    double magnitude = std::abs(acx * bcy) + std::abs(acy * bcx);
    if (std::abs(det) > DET_FILTER * magnitude) return det;
    // Below the filter bound the double sign is unreliable; recompute wider.
    long double lacx = (long double)a.x - c.x, lacy = (long double)a.y - c.y;
    long double lbcx = (long double)b.x - c.x, lbcy = (long double)b.y - c.y;
    return (double)(lacx * lbcy - lacy * lbcx);
}

double coord_scale(std::initializer_list<Point> pts) {
    double s = 0.0;
    for (const Point& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

struct Quadratic {
    // a*t^2 + b*t + c = 0 with grazing-tangency discriminant clamp.
    static std::vector<double> roots(double a, double b, double c, double scale2) {
        std::vector<double> out;
        if (std::abs(a) <= 1e-14 * (std::abs(b) + std::abs(c) + 1.0)) {
            if (b != 0.0) out.push_back(-c / b);
            return out;
        }
        double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) {
            if (disc > -1e-12 * std::max(scale2 * scale2, b * b)) {
                disc = 0.0;  // grazing tangency
            } else {
                return out;
            }
        }
        double sq = std::sqrt(disc);
        // Numerically stable split.
        double q = (b >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
        if (q != 0.0) {
            out.push_back(q / a);
            out.push_back(c / q);
        } else {
            out.push_back(0.0);
        }
        return out;
    }
};

}  // namespace

double orientation_value(Point a, Point b, Point c) { return det2_filtered(a, b, c); }

Orientation orientation(Point a, Point b, Point c) {
    double det = det2_filtered(a, b, c);
    double scale = coord_scale({a, b, c});
    if (std::abs(det) <= EPS_GEOM * scale * scale) return Orientation::COLLINEAR;
    return det > 0.0 ? Orientation::CCW : Orientation::CW;
}

double outcircle_value(Point a, Point b, Point c, Point d, double* magnitude) {
    // In-circle determinant on lifted differences; positive means d strictly
    // outside the circumcircle of CCW triangle abc.
    long double adx = (long double)a.x - d.x, ady = (long double)a.y - d.y;
    long double bdx = (long double)b.x - d.x, bdy = (long double)b.y - d.y;
    long double cdx = (long double)c.x - d.x, cdy = (long double)c.y - d.y;
    long double ad = adx * adx + ady * ady;
    long double bd = bdx * bdx + bdy * bdy;
    long double cd = cdx * cdx + cdy * cdy;
    long double det = adx * (bdy * cd - cdy * bd) - ady * (bdx * cd - cdx * bd) +
                      ad * (bdx * cdy - cdx * bdy);
    if (magnitude) {
        long double mag = std::abs(adx) * (std::abs(bdy) * cd + std::abs(cdy) * bd) +
                          std::abs(ady) * (std::abs(bdx) * cd + std::abs(cdx) * bd) +
                          ad * (std::abs(bdx * cdy) + std::abs(cdx * bdy));
        *magnitude = (double)mag;
    }
    // det > 0 <=> d inside circumcircle for CCW abc.
    return (double)(-det);
}

Point circumcenter(Point a, Point b, Point c) {
    long double abx = (long double)b.x - a.x, aby = (long double)b.y - a.y;
    long double acx = (long double)c.x - a.x, acy = (long double)c.y - a.y;
    long double d = 2.0L * (abx * acy - aby * acx);
    // Degenerate only when the sign of the doubled area is not even resolvable
    // in extended precision; thin-but-real triangles get their (far) center.
    long double dmag = 2.0L * (std::abs(abx * acy) + std::abs(aby * acx));
    if (std::abs(d) <= 8.0L * std::numeric_limits<long double>::epsilon() * dmag) {
        throw DegenerateTriangle();
    }
    long double ab2 = abx * abx + aby * aby;
    long double ac2 = acx * acx + acy * acy;
    long double ux = (acy * ab2 - aby * ac2) / d;
    long double uy = (abx * ac2 - acx * ab2) / d;
    return {a.x + (double)ux, a.y + (double)uy};
}

Point closest_on_segment(Point p, const Segment& s) {
    Point v = s.b - s.a;
    double len2 = dot(v, v);
    if (len2 == 0.0) return s.a;
    double t = dot(p - s.a, v) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return s.a + t * v;
}

double dist_point_segment(Point p, const Segment& s) {
    return dist(p, closest_on_segment(p, s));
}

double dist_point_line(Point p, const DirectedLine& l) {
    return cross(l.direction, p - l.anchor);
}

Point project_on_line(Point p, const DirectedLine& l) {
    double t = dot(p - l.anchor, l.direction);
    return l.anchor + t * l.direction;
}

DirectedLine bisector(Point p, Point p2) {
    double scale = std::max(1.0, coord_scale({p, p2}));
    Point v = p2 - p;
    if (norm(v) <= EPS_GEOM * scale) throw CoincidentPoints();
    Point mid = 0.5 * (p + p2);
    return {mid, normalized(Point{v.y, -v.x})};
}

Point bisector_point(Point p, Point p2, double t) {
    DirectedLine b = bisector(p, p2);
    return b.anchor + t * b.direction;
}

double bisector_param(Point p, Point p2, Point on_bisector) {
    DirectedLine b = bisector(p, p2);
    return dot(on_bisector - b.anchor, b.direction);
}

std::vector<double> tangency_roots(Point p, Point p2, const TangencyFeature& feature) {
    DirectedLine bis = bisector(p, p2);
    const Point mid = bis.anchor;
    const Point u = bis.direction;
    const double half2 = 0.25 * dist2(p, p2);  // rho(t)^2 = half2 + t^2
    const double scale = std::max({1.0, coord_scale({p, p2}), norm(mid)});

    std::vector<double> out;
    if (const Point* f = std::get_if<Point>(&feature)) {
        Point w = mid - *f;
        double a = 2.0 * dot(w, u);
        double rhs = half2 - dot(w, w);
        if (std::abs(a) > 1e-14 * scale) out.push_back(rhs / a);
        return out;
    }
    if (const Circle* f = std::get_if<Circle>(&feature)) {
        if (f->radius == 0.0) return tangency_roots(p, p2, f->center);
        Point w = mid - f->center;
        double A = 2.0 * dot(w, u);
        double B = dot(w, w) - half2 - f->radius * f->radius;
        auto cand = Quadratic::roots(A * A - 4.0 * f->radius * f->radius, 2.0 * A * B,
                                     B * B - f->radius * f->radius * 4.0 * half2, scale);
        for (double t : cand) {
            // Squaring introduced the internal-tangency branch; keep only
            // roots with a nonnegative pre-square left side.
            if (A * t + B >= -EPS_GEOM * scale * scale) out.push_back(t);
        }
        return out;
    }
    const Segment& seg = std::get<Segment>(feature);
    Point v = seg.b - seg.a;
    double len = norm(v);
    if (len <= EPS_GEOM * scale) return tangency_roots(p, p2, seg.a);
    Point vu = {v.x / len, v.y / len};
    double g0 = cross(vu, mid - seg.a);
    double g1 = cross(vu, u);
    auto cand = Quadratic::roots(g1 * g1 - 1.0, 2.0 * g0 * g1, g0 * g0 - half2, scale);
    for (double t : cand) {
        Point center = mid + t * u;
        double foot = dot(center - seg.a, vu);
        if (foot >= -EPS_GEOM * scale && foot <= len + EPS_GEOM * scale) out.push_back(t);
    }
    return out;
}

std::vector<double> line_tangency_roots(Point p, Point p2, const DirectedLine& l) {
    DirectedLine bis = bisector(p, p2);
    const double half2 = 0.25 * dist2(p, p2);
    const double scale = std::max({1.0, coord_scale({p, p2}), norm(bis.anchor)});
    double g0 = cross(l.direction, bis.anchor - l.anchor);
    double g1 = cross(l.direction, bis.direction);
    return Quadratic::roots(g1 * g1 - 1.0, 2.0 * g0 * g1, g0 * g0 - half2, scale);
}

std::optional<TangencySolution> solve_tangency_on_bisector(
    Point p, Point p2, double t0, double t1, const TangencyFeature& feature) {
    if (t0 > t1) std::swap(t0, t1);
    DirectedLine bis = bisector(p, p2);
    const double half2 = 0.25 * dist2(p, p2);
    const double tol = EPS_GEOM * std::max({1.0, std::abs(t0), std::abs(t1), norm(bis.anchor)});

    std::optional<TangencySolution> best;
    for (double t : tangency_roots(p, p2, feature)) {
        if (t < t0 - tol || t > t1 + tol) continue;
        double tc = std::clamp(t, t0, t1);
        double radius = std::sqrt(half2 + tc * tc);
        if (!best || radius < best->radius) {
            Point center = bis.anchor + tc * bis.direction;
            Point touch;
            if (const Point* f = std::get_if<Point>(&feature)) {
                touch = *f;
            } else if (const Circle* f = std::get_if<Circle>(&feature)) {
                touch = center + radius * normalized(f->center - center);
            } else {
                touch = closest_on_segment(center, std::get<Segment>(feature));
            }
            best = TangencySolution{center, radius, tc, touch};
        }
    }
    return best;
}

}  // namespace circsep
