#include "circsep/mec.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace circsep {

namespace {

Circle circle_two(Point a, Point b) {
    return {0.5 * (a + b), 0.5 * dist(a, b)};
}

bool in_circle(const Circle& c, Point p, double eps) {
    return dist(c.center, p) <= c.radius + eps;
}

Circle circle_three(Point a, Point b, Point c) {
    Point o = circumcenter(a, b, c);
    return {o, dist(o, a)};
}

}  // namespace

MecResult minimum_enclosing_circle(const std::vector<Point>& points, uint64_t seed) {
    if (points.empty()) throw EmptyInput();

    double scale = 1.0;
    for (const Point& p : points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = EPS_GEOM * scale;

    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    auto at = [&](size_t i) -> const Point& { return points[order[i]]; };

    // Move-to-front incremental: each violator is promoted and the prefix is
    // re-solved with it pinned to the boundary.
    Circle c{points[order[0]], 0.0};
    std::vector<int> support{order[0]};

    for (size_t i = 1; i < order.size(); ++i) {
        if (in_circle(c, at(i), eps)) continue;
        c = {at(i), 0.0};
        support = {order[i]};
        for (size_t j = 0; j < i; ++j) {
            if (in_circle(c, at(j), eps)) continue;
            c = circle_two(at(i), at(j));
            support = {order[i], order[j]};
            for (size_t k = 0; k < j; ++k) {
                if (in_circle(c, at(k), eps)) continue;
                try {
                    c = circle_three(at(i), at(j), at(k));
                    support = {order[i], order[j], order[k]};
                } catch (const DegenerateTriangle&) {
                    // Collinear triple: the diametral pair of the two
                    // extremes encloses the third.
                    Point p1 = at(i), p2 = at(j), p3 = at(k);
                    Circle best = circle_two(p1, p2);
                    support = {order[i], order[j]};
                    if (dist(p1, p3) > 2 * best.radius) {
                        best = circle_two(p1, p3);
                        support = {order[i], order[k]};
                    }
                    if (dist(p2, p3) > 2 * best.radius) {
                        best = circle_two(p2, p3);
                        support = {order[j], order[k]};
                    }
                    c = best;
                }
            }
        }
    }
    return {c, support};
}

}  // namespace circsep
