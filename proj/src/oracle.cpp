#include "circsep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace circsep::oracle {

namespace {

double point_scale(const std::vector<Point>& pts) {
    double s = 1.0;
    for (const Point& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

bool encloses(const Circle& c, const std::vector<Point>& pts, double band) {
    for (const Point& p : pts) {
        if (dist(c.center, p) > c.radius + band) return false;
    }
    return true;
}

bool open_disk_misses(const Circle& c, const QueryObject& q, double band) {
    if (const Point* p = std::get_if<Point>(&q)) {
        return dist(c.center, *p) >= c.radius - band;
    }
    if (const Circle* d = std::get_if<Circle>(&q)) {
        return dist(c.center, d->center) >= c.radius + d->radius - band;
    }
    const ConvexPolygon& poly = std::get<ConvexPolygon>(q);
    return circle_polygon_disjoint({c.center, c.radius - band}, poly);
}

std::vector<TangencyFeature> features_of(const QueryObject& q) {
    std::vector<TangencyFeature> out;
    if (const Point* p = std::get_if<Point>(&q)) {
        out.push_back(*p);
    } else if (const Circle* d = std::get_if<Circle>(&q)) {
        out.push_back(*d);
    } else {
        const ConvexPolygon& poly = std::get<ConvexPolygon>(q);
        for (int i = 0; i < poly.size(); ++i) {
            out.push_back(poly[i]);
            if (poly.size() >= 2) out.push_back(Segment{poly[i], poly.vertex_mod(i + 1)});
        }
    }
    return out;
}

Point touch_of(const TangencyFeature& f, const Circle& c) {
    if (const Point* p = std::get_if<Point>(&f)) return *p;
    if (const Segment* s = std::get_if<Segment>(&f)) return closest_on_segment(c.center, *s);
    const Circle& d = std::get<Circle>(f);
    return c.center + c.radius * normalized(d.center - c.center);
}

}  // namespace

std::vector<BruteNode> brute_fpvd(const std::vector<Point>& points) {
    ConvexPolygon hull = convex_hull(points);
    int h = hull.size();
    if (h < 3) throw Degenerate();
    double scale = point_scale(points);
    double band = 1e-9 * scale * 8;

    std::vector<BruteNode> nodes;
    for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
            for (int k = j + 1; k < h; ++k) {
                Point c;
                try {
                    c = circumcenter(hull[i], hull[j], hull[k]);
                } catch (const DegenerateTriangle&) {
                    continue;
                }
                double r = dist(c, hull[i]);
                bool farthest = true;
                for (int s = 0; s < h && farthest; ++s) {
                    if (dist(c, hull[s]) > r + band) farthest = false;
                }
                if (!farthest) continue;
                // Merge with an existing (cocircular) node if coincident.
                BruteNode* home = nullptr;
                for (BruteNode& n : nodes) {
                    if (dist(n.position, c) <= 1e-7 * std::max(1.0, r)) home = &n;
                }
                if (!home) {
                    nodes.push_back({c, {}});
                    home = &nodes.back();
                }
                for (int s : {i, j, k}) {
                    if (std::find(home->sites.begin(), home->sites.end(), s) ==
                        home->sites.end()) {
                        home->sites.push_back(s);
                    }
                }
            }
        }
    }
    for (BruteNode& n : nodes) std::sort(n.sites.begin(), n.sites.end());
    return nodes;
}

Circle brute_mec(const std::vector<Point>& points) {
    if (points.empty()) throw GeometryError("brute_mec: empty input");
    int n = (int)points.size();
    double band = 1e-9 * point_scale(points) * 8;
    Circle best{points[0], std::numeric_limits<double>::infinity()};
    if (n == 1) return {points[0], 0.0};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Circle c{0.5 * (points[i] + points[j]), 0.5 * dist(points[i], points[j])};
            if (c.radius < best.radius && encloses(c, points, band)) best = c;
            for (int k = j + 1; k < n; ++k) {
                Point cc;
                try {
                    cc = circumcenter(points[i], points[j], points[k]);
                } catch (const DegenerateTriangle&) {
                    continue;
                }
                Circle t{cc, dist(cc, points[i])};
                if (t.radius < best.radius && encloses(t, points, band)) best = t;
            }
        }
    }
    return best;
}

QueryResult brute_min_separating_circle(const std::vector<Point>& points,
                                        const QueryObject& q) {
    QueryResult res;
    ConvexPolygon hull = convex_hull(points);
    double scale = point_scale(points);
    double band = 1e-9 * scale * 8;

    Circle cp = brute_mec(points);
    if (open_disk_misses(cp, q, band)) {
        res.status = QueryStatus::SEPARATING;
        res.circle = cp;
        res.trivial_mec = true;
        for (const TangencyFeature& f : features_of(q)) {
            Point t = touch_of(f, cp);
            double err = std::abs(dist(cp.center, t) - cp.radius);
            if (err <= band * 8 && (!res.tangency || err < std::abs(dist(cp.center, *res.tangency) - cp.radius))) {
                res.tangency = t;
            }
        }
        return res;
    }

    std::vector<TangencyFeature> feats = features_of(q);
    std::optional<Circle> best;
    Point best_touch;
    int h = hull.size();
    for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
            for (const TangencyFeature& f : feats) {
                for (double t : tangency_roots(hull[i], hull[j], f)) {
                    Point c = bisector_point(hull[i], hull[j], t);
                    Circle cand{c, dist(c, hull[i])};
                    if (best && cand.radius >= best->radius) continue;
                    if (!encloses(cand, hull.vertices(), band)) continue;
                    if (!open_disk_misses(cand, q, band)) continue;
                    best = cand;
                    best_touch = touch_of(f, cand);
                }
            }
        }
    }
    if (!best) return res;  // no separating circle exists
    res.status = QueryStatus::SEPARATING;
    res.circle = *best;
    res.tangency = best_touch;
    return res;
}

}  // namespace circsep::oracle
