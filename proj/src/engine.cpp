#include "circsep/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace circsep {

namespace {

double sep_band(double rho) { return 1e-9 * std::max(1.0, rho); }

double feature_distance(Point x, const TangencyFeature& f) {
    if (const Point* p = std::get_if<Point>(&f)) return dist(x, *p);
    if (const Segment* s = std::get_if<Segment>(&f)) return dist_point_segment(x, *s);
    const Circle& c = std::get<Circle>(f);
    return dist(x, c.center) - c.radius;
}

// Separating line through `anchor` with P on the left; `n_away` is the unit
// normal pointing from the P side toward Q.
DirectedLine line_with_p_left(Point anchor, Point n_away) {
    return DirectedLine::through(anchor, perp(n_away));
}

Point rotate(Point v, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {v.x * c - v.y * s, v.x * s + v.y * c};
}

struct SepTest {
    const ConvexPolygon* poly = nullptr;  // full query polygon, when present
    const TangencyFeature* feat = nullptr;

    bool separating(const Circle& c) const {
        double band = sep_band(c.radius);
        if (poly) return circle_polygon_disjoint({c.center, c.radius - band}, *poly);
        return feature_distance(c.center, *feat) >= c.radius - band;
    }
};

Point tangency_on(const TangencyFeature& f, Point center, double radius) {
    if (const Point* p = std::get_if<Point>(&f)) return *p;
    if (const Segment* s = std::get_if<Segment>(&f)) return closest_on_segment(center, *s);
    const Circle& c = std::get<Circle>(f);
    return center + radius * normalized(c.center - center);
}

// The dual search. `chain` is the clockwise facing chain of a polygon query
// (>= 2 vertices) and `single` the query feature for point/circle queries;
// exactly one is set. `sep` is the SepTest against the full query object.
QueryResult run_search(const FpvdTree& T, const PathLocator& PL, const DirectedLine& sepl,
                       const std::vector<Point>* chain, const TangencyFeature* single,
                       const SepTest& sep, bool exact = false) {
    QueryResult res;
    res.status = QueryStatus::SEPARATING;

    DiagramLocation s = find_seed(T, sepl);
    const auto& nodes = T.nodes();

    if (s.kind == DiagramLocation::Kind::NODE && s.index == T.root()) {
        // The seed collapsed onto the root: C_P is separating after all
        // (borderline tangency); the minimum enclosing circle is the answer.
        res.circle = T.mec().circle;
        res.trivial_mec = true;
        return res;
    }

    int lo = T.root();  // known non-separating
    int hi = -1;        // shallowest known separating node, -1 while only s is known
    int deep_node;      // deepest path node whose status may be unknown
    switch (s.kind) {
        case DiagramLocation::Kind::NODE:
            hi = deep_node = s.index;
            break;
        case DiagramLocation::Kind::EDGE_POINT:
            deep_node = nodes[s.index].parent;
            break;
        default:
            deep_node = T.rays()[s.index].origin;
            break;
    }

    int a = 0, b = chain ? (int)chain->size() - 1 : 0;

    // Phase 1: shrink the node interval on pi_s; each ambiguous probe halves
    // the chain instead.
    while (true) {
        int z = -1;
        if (hi >= 0) {
            if (PL.depth(hi) - PL.depth(lo) >= 2) z = PL.find_point_between(hi, lo);
        } else if (deep_node != lo) {
            if (PL.depth(deep_node) - PL.depth(lo) >= 2) {
                z = PL.find_point_between(deep_node, lo);
            } else {
                z = deep_node;
            }
        }
        if (z < 0) break;

        Point zp = nodes[z].position;
        double rho = T.rho_node(z);
        double band = sep_band(rho);
        if (chain && !exact && b > a + 2) {
            int j = (a + b) / 2;
            Point qa = (*chain)[j], qb = (*chain)[j + 1];
            Point e = qb - qa;
            double elen = norm(e);
            double delta = std::abs(cross(e, zp - qa)) / elen;  // supporting line
            double Delta = dist_point_segment(zp, {qa, qb});
            if (rho <= delta) {
                hi = z;
                ++res.stats.path_steps;
            } else if (rho > Delta + band) {
                lo = z;
                ++res.stats.path_steps;
            } else {
                // C(z) crosses the line but misses the edge: the crossing side
                // keeps the tangency point. The probed edge itself may still
                // hold the tangency, so it survives in either half.
                double u = dot(zp - qa, e) / (elen * elen);
                if (u < 0.5) {
                    b = j + 1;
                } else {
                    a = j;
                }
                ++res.stats.chain_steps;
            }
        } else {
            double d;
            if (chain && exact && sep.poly) {
                d = contains_point(*sep.poly, zp) == Containment::OUTSIDE
                        ? distance_point(*sep.poly, zp).distance
                        : 0.0;
            } else if (chain) {
                d = std::numeric_limits<double>::infinity();
                for (int i = a; i < b; ++i) {
                    d = std::min(d, dist_point_segment(zp, {(*chain)[i], (*chain)[i + 1]}));
                }
            } else {
                d = feature_distance(zp, *single);
            }
            // No tolerance here: classifying a barely-non-separating probe as
            // separating can shift the final interval a whole node off the
            // root when the margin varies slowly along the path.
            if (rho <= d) {
                hi = z;
            } else {
                lo = z;
            }
            ++res.stats.path_steps;
        }
    }

    // The path interval is now a single piece of one bisector: either the
    // tree edge (lo -> hi) or the fragment from lo out to the seed location.
    std::array<int, 2> sites{};
    Point deep_pos;
    if (hi >= 0) {
        if (nodes[hi].parent != lo) throw InvariantBroken();
        sites = nodes[hi].edge_sites;
        deep_pos = nodes[hi].position;
    } else {
        sites = s.sites;
        deep_pos = s.position;
    }
    Point p1 = T.sites()[sites[0]], p2 = T.sites()[sites[1]];
    double t_sh = bisector_param(p1, p2, nodes[lo].position);
    double t_dp = bisector_param(p1, p2, deep_pos);
    double tmin = std::min(t_sh, t_dp), tmax = std::max(t_sh, t_dp);
    // Roots past the shallow end would stop enclosing P, so that side gets a
    // tight tolerance; the deep (seed) end can sit at a huge parameter and
    // only needs to admit its own rounding error.
    const double tol_sh = 8e-9 * std::max(1.0, std::abs(t_sh));
    const double tol_dp = 1e-7 * std::max(1.0, std::abs(t_dp));
    const double tol_lo = (t_sh < t_dp) ? tol_sh : tol_dp;
    const double tol_hi = (t_sh < t_dp) ? tol_dp : tol_sh;

    // Phase 2: the path is one edge; bracket the tangency feature on the
    // chain. The closest-point projection onto a convex chain is monotone
    // along a segment, so projecting both edge endpoints brackets the answer's
    // tangency; a bisection on the edge tightens the bracket if it is wide.
    std::vector<TangencyFeature> feats;
    if (chain) {
        int k = (int)chain->size() - 1;
        // Closest chain feature to x as a scalar position in [0, k]
        // (vertex i -> i, edge i interior -> i + param); O(log k) via the
        // monotone gradient of the unimodal vertex distances.
        auto project = [&](Point x, double& d_out) {
            int lo2 = 0, hi2 = k;
            while (hi2 - lo2 > 1) {
                int mid = (lo2 + hi2) / 2;
                ++res.stats.chain_steps;
                if (dist2(x, (*chain)[mid]) < dist2(x, (*chain)[mid - 1])) {
                    lo2 = mid;
                } else {
                    hi2 = mid - 1;
                }
            }
            int bestv = lo2;
            if (hi2 != lo2 && dist2(x, (*chain)[hi2]) < dist2(x, (*chain)[lo2])) bestv = hi2;
            double s = bestv;
            double bd2 = dist2(x, (*chain)[bestv]);
            for (int e : {bestv - 1, bestv}) {
                if (e < 0 || e >= k) continue;
                Point A = (*chain)[e], B = (*chain)[e + 1];
                double u = std::clamp(dot(x - A, B - A) / dist2(A, B), 0.0, 1.0);
                double dd = dist2(x, A + u * (B - A));
                if (dd < bd2) {
                    bd2 = dd;
                    s = e + u;
                }
            }
            d_out = std::sqrt(bd2);
            return s;
        };
        double d_sh, d_dp;
        double ta = t_sh, tb = t_dp;
        double sa = project(nodes[lo].position, d_sh);
        double sb = project(deep_pos, d_dp);
        for (int iter = 0; iter < 60 && std::abs(sa - sb) > 6.0; ++iter) {
            double tm = 0.5 * (ta + tb);
            Point x = bisector_point(p1, p2, tm);
            double d;
            double sm = project(x, d);
            // The separating side of the edge holds the deeper circles: step
            // toward the shallow end when the probe still separates.
            if (d >= dist(x, p1) - sep_band(dist(x, p1))) {
                tb = tm;
                sb = sm;
            } else {
                ta = tm;
                sa = sm;
            }
        }
        int flo = std::max(0, (int)std::floor(std::min(sa, sb)) - 1);
        int fhi = std::min(k, (int)std::ceil(std::max(sa, sb)) + 1);
        for (int i = flo; i < fhi; ++i) feats.push_back(Segment{(*chain)[i], (*chain)[i + 1]});
        for (int i = flo; i <= fhi; ++i) feats.push_back((*chain)[i]);
    } else {
        feats.push_back(*single);
    }

    // Finalize: closed-form tangency candidates on the final bisector piece
    // against the candidate features; keep the smallest separating circle.
    std::optional<Circle> best;
    Point best_touch;
    for (const TangencyFeature& f : feats) {
        for (double t : tangency_roots(p1, p2, f)) {
            if (t < tmin - tol_lo || t > tmax + tol_hi) continue;
            double tc = std::clamp(t, tmin, tmax);
            Point c = bisector_point(p1, p2, tc);
            Circle cand{c, dist(c, p1)};
            if (best && cand.radius >= best->radius) continue;
            if (!sep.separating(cand)) continue;
            best = cand;
            best_touch = tangency_on(f, c, cand.radius);
        }
    }
    if (!best) {
        // Phase 1's chain narrowing is heuristic; redo the path search with
        // exact polygon distances before giving up.
        if (chain && !exact) return run_search(T, PL, sepl, chain, single, sep, true);
        throw NoRoot();
    }
    res.circle = *best;
    res.tangency = best_touch;
    return res;
}

}  // namespace

DiagramLocation find_seed(const FpvdTree& T, const DirectedLine& sepl) {
    const ConvexPolygon& hull = T.hull();
    int h = hull.size();
    double scale = 1.0;
    for (const Point& p : T.sites()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});

    Point toward = -1.0 * perp(sepl.direction);  // from P toward the line
    int i = extreme_vertex(hull, toward);
    Point ray_dir = -1.0 * toward;
    if (h >= 2) {
        auto val = [&](int k) { return dot(hull.vertex_mod(k), toward); };
        bool tie = std::abs(val(i + 1) - val(i)) <= 1e-9 * scale ||
                   std::abs(val(i + h - 1) - val(i)) <= 1e-9 * scale;
        if (tie) {
            // Emulate rotating the line slightly, deterministically.
            Point toward2 = rotate(toward, EPS_TIE);
            i = extreme_vertex(hull, toward2);
            ray_dir = -1.0 * toward2;
        }
    }
    DiagramLocation s =
        T.ray_exit_of_region(i, DirectedLine::through(T.sites()[i], ray_dir));
    double rho = T.rho(s);
    if (dist_point_line(s.position, sepl) < rho * (1.0 - 1e-6) - 1e-9 * scale) {
        throw SeedFailure();
    }
    return s;
}

QueryResult query_point(const FpvdTree& T, const PathLocator& PL, Point q) {
    QueryResult res;
    const ConvexPolygon& hull = T.hull();
    Containment cont = contains_point(hull, q);
    if (cont == Containment::INSIDE) return res;

    const Circle& CP = T.mec().circle;
    double band = sep_band(CP.radius);
    double dq = dist(CP.center, q);
    if (dq >= CP.radius - band) {
        res.status = QueryStatus::SEPARATING;
        res.circle = CP;
        res.trivial_mec = true;
        if (dq <= CP.radius + band) res.tangency = q;
        return res;
    }

    DirectedLine sepl;
    if (cont == Containment::BOUNDARY) {
        // On the hull boundary: separable only from a hull vertex.
        double scale = std::max({1.0, std::abs(q.x), std::abs(q.y)});
        int vi = -1;
        for (int k = 0; k < hull.size(); ++k) {
            if (dist(hull[k], q) <= 1e-9 * scale) vi = k;
        }
        if (vi < 0 || hull.size() < 2) return res;  // edge interior: impossible
        Point prev = hull.vertex_mod(vi - 1), next = hull.vertex_mod(vi + 1);
        Point tangent = hull.size() >= 3 ? next - prev : perp(next - q);
        sepl = DirectedLine::through(q, tangent);
        Point probe = hull.size() >= 3 ? prev : next;
        if (dist_point_line(probe, sepl) < 0) {
            sepl.direction = -1.0 * sepl.direction;
        }
    } else {
        DistanceResult dr = distance_point(hull, q);
        sepl = line_with_p_left(q, normalized(q - dr.closest));
    }
    TangencyFeature f = q;
    SepTest sep{nullptr, &f};
    return run_search(T, PL, sepl, nullptr, &f, sep);
}

QueryResult query_circle(const FpvdTree& T, const PathLocator& PL, const Circle& D) {
    if (D.radius <= 0.0) return query_point(T, PL, D.center);
    QueryResult res;
    const ConvexPolygon& hull = T.hull();
    double scale = std::max({1.0, std::abs(D.center.x), std::abs(D.center.y)});
    for (const Point& p : T.sites()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    double band = 1e-9 * scale;

    Containment cc = contains_point(hull, D.center);
    if (cc != Containment::OUTSIDE) return res;  // open disk overlaps the hull
    DistanceResult dr = distance_point(hull, D.center);
    double gap = dr.distance - D.radius;
    if (gap < -band) return res;
    if (gap <= band && !dr.on_vertex) {
        // Tangent inside a hull edge: the tangency constraints are empty.
        double vd = std::min(dist(dr.closest, hull[dr.feature]),
                             dist(dr.closest, hull.vertex_mod(dr.feature + 1)));
        if (vd > band * 8) return res;
    }

    const Circle& CP = T.mec().circle;
    double cgap = dist(CP.center, D.center) - CP.radius - D.radius;
    if (cgap >= -sep_band(CP.radius)) {
        res.status = QueryStatus::SEPARATING;
        res.circle = CP;
        res.trivial_mec = true;
        if (cgap <= sep_band(CP.radius)) {
            res.tangency = CP.center + CP.radius * normalized(D.center - CP.center);
        }
        return res;
    }

    Point n = normalized(D.center - dr.closest);
    Point touch = D.center - D.radius * n;
    DirectedLine sepl = line_with_p_left(touch, n);
    TangencyFeature f = D;
    SepTest sep{nullptr, &f};
    return run_search(T, PL, sepl, nullptr, &f, sep);
}

QueryResult query_polygon(const FpvdTree& T, const PathLocator& PL, const ConvexPolygon& Q) {
    QueryResult res;
    if (Q.size() == 1) return query_point(T, PL, Q[0]);
    const ConvexPolygon& hull = T.hull();
    double scale = 1.0;
    for (const Point& p : T.sites()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    for (const Point& p : Q.vertices()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    double band = 1e-9 * scale;

    PolygonGap gap = polygon_gap(hull, Q);
    if (gap.distance < -band) return res;
    if (gap.distance <= band) {
        // Touching: separable only when the contact is at a hull vertex.
        double vd = std::numeric_limits<double>::infinity();
        for (int k = 0; k < hull.size(); ++k) vd = std::min(vd, dist(hull[k], gap.witness_a));
        if (vd > band * 8) return res;
    }

    const Circle& CP = T.mec().circle;
    if (circle_polygon_disjoint({CP.center, CP.radius - sep_band(CP.radius)}, Q)) {
        res.status = QueryStatus::SEPARATING;
        res.circle = CP;
        res.trivial_mec = true;
        if (contains_point(Q, CP.center) == Containment::OUTSIDE) {
            DistanceResult dq = distance_point(Q, CP.center);
            if (dq.distance <= CP.radius + sep_band(CP.radius)) res.tangency = dq.closest;
        }
        return res;
    }

    auto sepl = separating_line(hull, Q);
    if (!sepl) return res;

    InternalTangents tang;
    try {
        tang = internal_tangents(hull, Q);
    } catch (const PolygonsIntersect&) {
        return res;  // borderline contact
    }
    if (dist(tang.q_first, tang.q_second) <= band * 8) {
        // q = q': the whole facing chain is one vertex.
        return query_point(T, PL, tang.q_first);
    }
    std::vector<Point> chain = chain_between(Q, tang.q_first, tang.q_second);
    if (chain.size() == 1) return query_point(T, PL, chain[0]);
    SepTest sep{&Q, nullptr};
    return run_search(T, PL, *sepl, &chain, nullptr, sep);
}

}  // namespace circsep
