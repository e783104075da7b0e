#include "doctest.h"

#include <cmath>
#include <random>

#include "circsep/bench.hpp"
#include "circsep/engine.hpp"
#include "circsep/oracle.hpp"

using namespace circsep;

namespace {

std::vector<Point> random_points(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return pts;
}

std::vector<Point> ellipse_points(int n, double a = 10.0, double b = 1.0) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n;
        pts.push_back({a * std::cos(ang), b * std::sin(ang)});
    }
    return pts;
}

// A random query point just beyond a support line of the hull: outside the
// hull but usually inside C_P, so the search path is non-trivial.
// Query objects launch radially from a random hull vertex, staying close
// enough to usually land inside the enclosing circle (non-trivial queries).
Point random_facing_point(std::mt19937_64& rng, const FpvdTree& t) {
    std::uniform_real_distribution<double> off(1e-3, 0.3);
    const ConvexPolygon& hull = t.hull();
    Point v = hull[(int)(rng() % hull.size())];
    Point u = normalized(v - t.mec().circle.center);
    return v + (off(rng) * t.mec().circle.radius) * u;
}

Circle random_facing_circle(std::mt19937_64& rng, const FpvdTree& t) {
    std::uniform_real_distribution<double> off(1e-3, 0.3);
    std::uniform_real_distribution<double> rad(0.0, 0.2);
    const ConvexPolygon& hull = t.hull();
    Point v = hull[(int)(rng() % hull.size())];
    Point u = normalized(v - t.mec().circle.center);
    double r = rad(rng) * t.mec().circle.radius;
    return {v + (r + off(rng) * t.mec().circle.radius) * u, r};
}

void check_result_invariants(const FpvdTree& t, const QueryResult& r,
                             const oracle::QueryObject& q) {
    REQUIRE(r.status == QueryStatus::SEPARATING);
    double tol = 1e-6 * std::max(1.0, r.circle.radius);
    for (const Point& p : t.sites()) {
        CHECK(dist(r.circle.center, p) <= r.circle.radius + tol);
    }
    if (const Point* qp = std::get_if<Point>(&q)) {
        CHECK(dist(r.circle.center, *qp) >= r.circle.radius - tol);
    } else if (const Circle* qc = std::get_if<Circle>(&q)) {
        CHECK(dist(r.circle.center, qc->center) >= r.circle.radius + qc->radius - tol);
    } else {
        const ConvexPolygon& poly = std::get<ConvexPolygon>(q);
        CHECK(circle_polygon_disjoint({r.circle.center, r.circle.radius - tol}, poly));
    }
    if (r.tangency) {
        CHECK(dist(r.circle.center, *r.tangency) ==
              doctest::Approx(r.circle.radius).epsilon(1e-6));
    }
}

void check_matches_oracle(const std::vector<Point>& pts, const FpvdTree& t,
                          const QueryResult& r, const oracle::QueryObject& q) {
    QueryResult o = oracle::brute_min_separating_circle(pts, q);
    REQUIRE(r.status == o.status);
    if (r.status != QueryStatus::SEPARATING) return;
    check_result_invariants(t, r, q);
    CHECK(r.circle.radius ==
          doctest::Approx(o.circle.radius).epsilon(1e-6));
    CHECK(dist(r.circle.center, o.circle.center) <= 1e-6 * std::max(1.0, o.circle.radius));
}

}  // namespace

TEST_CASE("point query: two sites, query between the rays") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    QueryResult r = query_point(t, loc, {1, 0.5});
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.circle.center.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.circle.center.y == doctest::Approx(-0.75).epsilon(1e-9));
    CHECK(r.circle.radius == doctest::Approx(1.25).epsilon(1e-9));
    CHECK_FALSE(r.trivial_mec);
    REQUIRE(r.tangency.has_value());
    CHECK(r.tangency->x == doctest::Approx(1.0));
    CHECK(r.tangency->y == doctest::Approx(0.5));
}

TEST_CASE("circle query reproduces the point-query answer at its near pole") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    QueryResult r = query_circle(t, loc, {{1, 1}, 0.5});
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.circle.center.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.circle.center.y == doctest::Approx(-0.75).epsilon(1e-9));
    CHECK(r.circle.radius == doctest::Approx(1.25).epsilon(1e-9));
    REQUIRE(r.tangency.has_value());
    CHECK(r.tangency->x == doctest::Approx(1.0));
    CHECK(r.tangency->y == doctest::Approx(0.5));
}

TEST_CASE("polygon query: square with its bottom edge facing P") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    ConvexPolygon sq = make_polygon({{0, 0.5}, {2, 0.5}, {2, 1.5}, {0, 1.5}});
    QueryResult r = query_polygon(t, loc, sq);
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.circle.center.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.circle.center.y == doctest::Approx(-0.75).epsilon(1e-9));
    CHECK(r.circle.radius == doctest::Approx(1.25).epsilon(1e-9));
    CHECK_FALSE(r.trivial_mec);
    REQUIRE(r.tangency.has_value());
    CHECK(r.tangency->x == doctest::Approx(1.0));
    CHECK(r.tangency->y == doctest::Approx(0.5));
}

TEST_CASE("point query below with an extreme-vertex tie") {
    // Both sites are equally close to the separating line; the deterministic
    // angular tie-break still yields the unique answer.
    FpvdTree t = FpvdTree::build({{0, 0}, {4, 0}});
    PathLocator loc = PathLocator::build(t);
    QueryResult r = query_point(t, loc, {2, -1});
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.circle.center.x == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.circle.center.y == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(r.circle.radius == doctest::Approx(2.5).epsilon(1e-9));
    REQUIRE(r.tangency.has_value());
    CHECK(r.tangency->x == doctest::Approx(2.0));
    CHECK(r.tangency->y == doctest::Approx(-1.0));
}

TEST_CASE("far query polygon returns the enclosing circle unchanged") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    ConvexPolygon sq = make_polygon({{0, 1}, {2, 1}, {2, 2}, {0, 2}});
    QueryResult r = query_polygon(t, loc, sq);
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.trivial_mec);
    CHECK(r.circle.center.x == doctest::Approx(1.0));
    CHECK(r.circle.center.y == doctest::Approx(0.0));
    CHECK(r.circle.radius == doctest::Approx(1.0));
    REQUIRE(r.tangency.has_value());  // the square touches the circle at (1,1)
    CHECK(r.tangency->x == doctest::Approx(1.0));
    CHECK(r.tangency->y == doctest::Approx(1.0));
    CHECK(r.stats.path_steps == 0);
    CHECK(r.stats.chain_steps == 0);
}

TEST_CASE("overlapping queries report no separating circle") {
    FpvdTree t = FpvdTree::build({{0, 0}, {4, 0}, {2, 3}});
    PathLocator loc = PathLocator::build(t);
    CHECK(query_point(t, loc, {2, 2}).status == QueryStatus::NO_SEPARATING_CIRCLE);
    CHECK(query_circle(t, loc, {{4, 2}, 2.0}).status == QueryStatus::NO_SEPARATING_CIRCLE);
    ConvexPolygon sq = make_polygon({{1, 1}, {3, 1}, {3, 2}, {1, 2}});
    CHECK(query_polygon(t, loc, sq).status == QueryStatus::NO_SEPARATING_CIRCLE);
    // A circle whose disk swallows the hull has no separator either.
    CHECK(query_circle(t, loc, {{2, 1}, 50.0}).status == QueryStatus::NO_SEPARATING_CIRCLE);
}

TEST_CASE("zero-radius circle query equals the point query") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    QueryResult a = query_point(t, loc, {1, 0.5});
    QueryResult b = query_circle(t, loc, {{1, 0.5}, 0.0});
    CHECK(a.circle.center.x == b.circle.center.x);
    CHECK(a.circle.center.y == b.circle.center.y);
    CHECK(a.circle.radius == b.circle.radius);
}

TEST_CASE("chain collapsing to one vertex reduces to the point query exactly") {
    FpvdTree t = FpvdTree::build({{0, 0}, {4, 0}});
    PathLocator loc = PathLocator::build(t);
    ConvexPolygon tri = make_polygon({{2, -1}, {1, -2}, {3, -2}});
    QueryResult a = query_polygon(t, loc, tri);
    QueryResult b = query_point(t, loc, {2, -1});
    REQUIRE(a.status == QueryStatus::SEPARATING);
    CHECK(a.circle.center.x == b.circle.center.x);
    CHECK(a.circle.center.y == b.circle.center.y);
    CHECK(a.circle.radius == b.circle.radius);
    CHECK(a.tangency->x == b.tangency->x);
    CHECK(a.tangency->y == b.tangency->y);
}

TEST_CASE("multi-edge facing chain: tangency lands on a polygon vertex") {
    FpvdTree t = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator loc = PathLocator::build(t);
    std::vector<Point> vs;
    for (int k = 0; k < 8; ++k) {
        double a = 2.0 * M_PI * k / 8;
        vs.push_back({1.0 + 2.0 * std::cos(a), 2.2 + 2.0 * std::sin(a)});
    }
    ConvexPolygon oct = make_polygon(vs);
    QueryResult r = query_polygon(t, loc, oct);
    REQUIRE(r.status == QueryStatus::SEPARATING);
    CHECK(r.circle.center.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.circle.center.y == doctest::Approx(-2.4).epsilon(1e-9));
    CHECK(r.circle.radius == doctest::Approx(2.6).epsilon(1e-9));
    REQUIRE(r.tangency.has_value());
    CHECK(r.tangency->x == doctest::Approx(1.0));
    CHECK(r.tangency->y == doctest::Approx(0.2));
    check_matches_oracle({{0, 0}, {2, 0}}, t, r, oracle::QueryObject(oct));
}

TEST_CASE("random point queries match the oracle") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + (int)(rng() % 62);
        auto pts = random_points(rng, n, 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        Point q = random_facing_point(rng, t);
        QueryResult r = query_point(t, loc, q);
        check_matches_oracle(pts, t, r, oracle::QueryObject(q));
    }
}

TEST_CASE("random circle queries match the oracle") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + (int)(rng() % 62);
        auto pts = random_points(rng, n, 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        Circle q = random_facing_circle(rng, t);
        QueryResult r = query_circle(t, loc, q);
        check_matches_oracle(pts, t, r, oracle::QueryObject(q));
    }
}

TEST_CASE("random polygon queries match the oracle") {
    std::mt19937_64 rng(303);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + (int)(rng() % 62);
        int m = 3 + (int)(rng() % 14);
        auto pts = random_points(rng, n, 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        ConvexPolygon q = bench::random_query_polygon(rng, t.hull(), t.mec().circle, m);
        if (polygon_gap(t.hull(), q).distance <= 1e-6) continue;
        QueryResult r = query_polygon(t, loc, q);
        if (r.status == QueryStatus::SEPARATING && !r.trivial_mec) ++nontrivial;
        check_matches_oracle(pts, t, r, oracle::QueryObject(q));
    }
    CHECK(nontrivial > 100);  // the generator must exercise the real search
}

TEST_CASE("step counts stay logarithmic on a deep-path diagram") {
    int n = 4096;
    FpvdTree t = FpvdTree::build(ellipse_points(n));
    PathLocator loc = PathLocator::build(t);
    std::mt19937_64 rng(55);
    int m = 64;
    int bound = 2 * ((int)std::ceil(std::log2((double)n)) + (int)std::ceil(std::log2((double)m))) + 8;
    int deep = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Point q = random_facing_point(rng, t);
        QueryResult r = query_point(t, loc, q);
        REQUIRE(r.status == QueryStatus::SEPARATING);
        CHECK(r.stats.path_steps + r.stats.chain_steps <= bound);
        if (r.stats.path_steps >= 4) ++deep;

        ConvexPolygon poly = bench::random_query_polygon(rng, t.hull(), t.mec().circle, m);
        if (polygon_gap(t.hull(), poly).distance <= 1e-6) continue;
        QueryResult rp = query_polygon(t, loc, poly);
        REQUIRE(rp.status == QueryStatus::SEPARATING);
        CHECK(rp.stats.path_steps + rp.stats.chain_steps <= bound);
        check_result_invariants(t, rp, oracle::QueryObject(poly));
    }
    CHECK(deep > 50);  // most queries must walk a real path, not the trivial exit
}

TEST_CASE("query answers are deterministic") {
    std::mt19937_64 rng(77);
    auto pts = random_points(rng, 100, 7.0);
    FpvdTree t = FpvdTree::build(pts);
    PathLocator loc = PathLocator::build(t);
    Point q{30.0, 17.0};
    QueryResult a = query_point(t, loc, q);
    QueryResult b = query_point(t, loc, q);
    CHECK(a.circle.center.x == b.circle.center.x);
    CHECK(a.circle.center.y == b.circle.center.y);
    CHECK(a.circle.radius == b.circle.radius);
}
