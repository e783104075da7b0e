// Acceptance suite: one line of output per criterion, exit code = number of
// failed criteria. Deliberately self-contained (no test framework) so the
// pass/fail lines read as a report.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "circsep/bench.hpp"
#include "circsep/oracle.hpp"

using namespace circsep;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<Point> random_points(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return pts;
}

std::vector<Point> uniform_disk(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    std::vector<Point> pts;
    while ((int)pts.size() < n) {
        Point p{u(rng), u(rng)};
        if (p.x * p.x + p.y * p.y <= r * r) pts.push_back(p);
    }
    return pts;
}

// Query generators hug the hull: objects land just beyond a random support
// line, so they usually poke into the enclosing circle and force a real search.
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

bool matches(const QueryResult& got, const QueryResult& want) {
    if (got.status != want.status) return false;
    if (got.status != QueryStatus::SEPARATING) return true;
    double tol = 1e-6 * std::max(1.0, want.circle.radius);
    return std::abs(got.circle.radius - want.circle.radius) <= tol &&
           dist(got.circle.center, want.circle.center) <= tol;
}

int ceil_log2(long long v) {
    int k = 0;
    while ((1ll << k) < v) ++k;
    return k;
}

struct StepViolations {
    long long checked = 0;
    long long violations = 0;
    void add_point(int n, const QueryStats& s) {
        ++checked;
        if (s.path_steps > ceil_log2(n) + 2) ++violations;
    }
    void add_polygon(int n, int m, const QueryStats& s) {
        ++checked;
        if (s.path_steps + s.chain_steps > 2 * (ceil_log2(n) + ceil_log2(m)) + 8) {
            ++violations;
        }
    }
};

StepViolations steps;  // accumulated across criteria 1-3

// ---------------------------------------------------------------------------

void criterion_1() {
    auto t0 = clock_type::now();
    std::mt19937_64 rng(42);
    int total = 5000, mismatches = 0;
    for (int trial = 0; trial < total; ++trial) {
        int n = 3 + (int)(rng() % 62);
        int m = 3 + (int)(rng() % 14);
        auto pts = random_points(rng, n, 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        ConvexPolygon q;
        do {
            q = bench::random_query_polygon(rng, t.hull(), t.mec().circle, m);
        } while (polygon_gap(t.hull(), q).distance <= 1e-6);
        QueryResult r = query_polygon(t, loc, q);
        steps.add_polygon(n, m, r.stats);
        QueryResult o = oracle::brute_min_separating_circle(pts, oracle::QueryObject(q));
        if (!matches(r, o)) ++mismatches;
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "polygon vs oracle: %d/%d match, %.1f s (budget 60 s)",
                  total - mismatches, total, secs);
    report(1, mismatches == 0 && secs <= 60.0, buf);
}

void criterion_2() {
    std::mt19937_64 rng(43);
    int total = 5000, point_bad = 0, circle_bad = 0;
    for (int trial = 0; trial < total; ++trial) {
        int n = 3 + (int)(rng() % 62);
        auto pts = random_points(rng, n, 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);

        Point q = random_facing_point(rng, t);
        QueryResult rp = query_point(t, loc, q);
        steps.add_point(n, rp.stats);
        if (!matches(rp, oracle::brute_min_separating_circle(pts, oracle::QueryObject(q)))) {
            ++point_bad;
        }

        Circle qc = random_facing_circle(rng, t);
        QueryResult rc = query_circle(t, loc, qc);
        steps.add_point(n, rc.stats);
        if (!matches(rc, oracle::brute_min_separating_circle(pts, oracle::QueryObject(qc)))) {
            ++circle_bad;
        }
    }

    // Closed-form spot values.
    FpvdTree t2 = FpvdTree::build({{0, 0}, {2, 0}});
    PathLocator l2 = PathLocator::build(t2);
    QueryResult e2 = query_point(t2, l2, {1, 0.5});
    QueryResult e3 = query_circle(t2, l2, {{1, 1}, 0.5});
    FpvdTree t5 = FpvdTree::build({{0, 0}, {4, 0}});
    PathLocator l5 = PathLocator::build(t5);
    QueryResult e5 = query_point(t5, l5, {2, -1});
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    bool frozen = near(e2.circle.center.x, 1.0) && near(e2.circle.center.y, -0.75) &&
                  near(e2.circle.radius, 1.25) && near(e3.circle.center.x, 1.0) &&
                  near(e3.circle.center.y, -0.75) && near(e3.circle.radius, 1.25) &&
                  near(e5.circle.center.x, 2.0) && near(e5.circle.center.y, 1.5) &&
                  near(e5.circle.radius, 2.5);

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "point %d/%d, circle %d/%d match; closed-form values %s",
                  total - point_bad, total, total - circle_bad, total,
                  frozen ? "exact to 1e-9" : "WRONG");
    report(2, point_bad == 0 && circle_bad == 0 && frozen, buf);
}

void criterion_3() {
    // Stress runs on a deep diagram, added to the samples from criteria 1-2.
    int n = 100000, m = 1024;
    FpvdTree t = FpvdTree::build(bench::ellipse_sites(n));
    PathLocator loc = PathLocator::build(t);
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        Point q = random_facing_point(rng, t);
        steps.add_point(n, query_point(t, loc, q).stats);
        ConvexPolygon poly = bench::random_query_polygon(rng, t.hull(), t.mec().circle, m);
        steps.add_polygon(n, m, query_polygon(t, loc, poly).stats);
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "step bounds: %lld violations over %lld queries",
                  steps.violations, steps.checked);
    report(3, steps.violations == 0, buf);
}

void criterion_4() {
    bench::Config cfg;
    cfg.n_values = {1 << 10, 1 << 12, 1 << 14, 1 << 16, 1 << 18, 1 << 20};
    cfg.m_values = {64};
    cfg.queries_per_cell = 10000;
    auto cells = bench::run(cfg);
    std::vector<double> x, y;
    bool max_ok = true;
    for (const auto& c : cells) {
        x.push_back(std::log2((double)c.n));
        y.push_back(c.mean_total_steps);
        if (c.max_total_steps > 2 * (ceil_log2(c.n) + ceil_log2(c.m)) + 8) max_ok = false;
    }
    auto fit_n = bench::fit_line(x, y);

    bench::Config cfg_m;
    cfg_m.n_values = {1 << 14};
    cfg_m.m_values = {8, 32, 128, 512, 2048, 8192, 16384};
    cfg_m.queries_per_cell = 10000;
    auto cells_m = bench::run(cfg_m);
    std::vector<double> xm, ym;
    for (const auto& c : cells_m) {
        xm.push_back(std::log2((double)c.m));
        ym.push_back(c.mean_total_steps);
        if (c.max_total_steps > 2 * (ceil_log2(c.n) + ceil_log2(c.m)) + 8) max_ok = false;
    }
    auto fit_m = bench::fit_line(xm, ym);

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "mean steps vs log2 n: R^2=%.4f (slope %.2f); vs log2 m: R^2=%.4f "
                  "(slope %.2f); max cells within bound: %s",
                  fit_n.r2, fit_n.b, fit_m.r2, fit_m.b, max_ok ? "yes" : "no");
    report(4, fit_n.r2 >= 0.95 && fit_m.r2 >= 0.95 && max_ok, buf);
}

void criterion_5() {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int trials = 1000;
    long long mono_bad = 0, union_bad = 0, lca_bad = 0, tang_bad = 0, tang_done = 0;

    for (int trial = 0; trial < trials; ++trial) {
        auto pts = random_points(rng, 6 + (int)(rng() % 58), 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        const auto& nodes = t.nodes();
        int nn = (int)nodes.size();

        // rho monotone along a random root path.
        int v = (int)(rng() % nn);
        while (nodes[v].parent >= 0) {
            int p = nodes[v].parent;
            if (t.rho_node(v) < t.rho_node(p) * (1.0 - 1e-9)) ++mono_bad;
            v = p;
        }

        // C(z) within C(x) union C(y) for z on a random tree edge.
        int c = (int)(rng() % nn);
        if (nodes[c].parent >= 0) {
            int p = nodes[c].parent;
            double u = uni(rng);
            Point z = nodes[p].position + u * (nodes[c].position - nodes[p].position);
            Circle cz = t.min_pcircle_at(z);
            double rx = t.rho_node(p), ry = t.rho_node(c);
            for (int k = 0; k < 32; ++k) {
                double a = 2.0 * M_PI * k / 32;
                Point b = cz.center + cz.radius * Point{std::cos(a), std::sin(a)};
                double inflate = 1e-9 * std::max({1.0, rx, ry});
                bool in_x = dist(b, nodes[p].position) <= rx + inflate;
                bool in_y = dist(b, nodes[c].position) <= ry + inflate;
                if (!in_x && !in_y) ++union_bad;
            }
        }

        // LCA of two separating nodes is separating with no larger rho.
        Point q = random_facing_point(rng, t);
        std::vector<int> sep;
        for (int i = 0; i < nn; ++i) {
            if (dist(nodes[i].position, q) >= t.rho_node(i) * (1.0 - 1e-9)) sep.push_back(i);
        }
        if (sep.size() >= 2) {
            int x = sep[rng() % sep.size()], y = sep[rng() % sep.size()];
            int w = loc.lca(x, y);
            double rw = t.rho_node(w);
            if (dist(nodes[w].position, q) < rw * (1.0 - 1e-8)) ++lca_bad;
            if (rw > std::min(t.rho_node(x), t.rho_node(y)) * (1.0 + 1e-9)) ++lca_bad;
        }

        // Tangency uniqueness for a polygon query.
        ConvexPolygon poly =
            bench::random_query_polygon(rng, t.hull(), t.mec().circle, 3 + (int)(rng() % 10));
        if (polygon_gap(t.hull(), poly).distance <= 1e-6) continue;
        QueryResult r = query_polygon(t, loc, poly);
        if (r.status != QueryStatus::SEPARATING || !r.tangency) continue;
        ++tang_done;
        double rr = r.circle.radius;
        double second = std::numeric_limits<double>::infinity();
        for (int i = 0; i < poly.size(); ++i) {
            Segment e{poly[i], poly.vertex_mod(i + 1)};
            for (int kind = 0; kind < 2; ++kind) {
                Point cp = kind == 0 ? poly[i] : closest_on_segment(r.circle.center, e);
                if (dist(cp, *r.tangency) <= 1e-6 * std::max(1.0, rr)) continue;
                second = std::min(second, dist(r.circle.center, cp));
            }
        }
        if (second - rr <= 1e-9 * rr) ++tang_bad;
    }

    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "monotonicity bad=%lld, union bad=%lld, lca bad=%lld, tangency "
                  "non-unique=%lld (of %lld with tangency)",
                  mono_bad, union_bad, lca_bad, tang_bad, tang_done);
    report(5, mono_bad + union_bad + lca_bad + tang_bad == 0, buf);
}

void criterion_6() {
    std::mt19937_64 rng(46);
    int trials = 1000;
    long long bad = 0, validated = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Point> pts;
        int kind = trial % 10;
        int n = 3 + (int)(rng() % 46);
        if (kind == 8) {
            // cocircular stress
            for (int i = 0; i < n; ++i) {
                double a = 2.0 * M_PI * i / n;
                pts.push_back({5.0 * std::cos(a), 5.0 * std::sin(a)});
            }
        } else if (kind == 9) {
            // collinear stress
            for (int i = 0; i < n; ++i) pts.push_back({(double)i, 2.0 * i});
        } else {
            pts = random_points(rng, n, 9.0);
        }
        FpvdTree t = FpvdTree::build(pts);
        if (!t.validate().empty()) {
            ++bad;
            continue;
        }
        ++validated;
        if (t.sites().size() < 3) continue;  // collinear collapse: no brute nodes

        auto brute = oracle::brute_fpvd(pts);
        size_t matched = 0;
        bool splice_seen = false;
        for (const auto& nd : t.nodes()) {
            bool found = false;
            for (const auto& bn : brute) {
                if (dist(bn.position, nd.position) <=
                    1e-7 * std::max(1.0, norm(nd.position))) {
                    std::vector<int> ds = nd.defining_sites;
                    std::sort(ds.begin(), ds.end());
                    if (ds == bn.sites) {
                        found = true;
                        ++matched;
                    }
                }
            }
            if (!found) {
                if (nd.defining_sites.size() == 2 && !splice_seen) {
                    splice_seen = true;  // the spliced root is not a Voronoi vertex
                } else {
                    ++bad;
                }
            }
        }
        if (matched != brute.size()) ++bad;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d builds, %lld validated, %lld node-set mismatches",
                  trials, validated, bad);
    report(6, bad == 0, buf);
}

void criterion_7() {
    std::mt19937_64 rng(47);
    auto big = uniform_disk(rng, 1000000, 1000.0);
    auto t0 = clock_type::now();
    FpvdTree t = FpvdTree::build(big);
    double build_s = seconds_since(t0);

    long long vm_peak_kb = 0;
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmPeak:", 0) == 0) {
            std::sscanf(line.c_str(), "VmPeak: %lld", &vm_peak_kb);
        }
    }

    auto pts = uniform_disk(rng, 100000, 1000.0);
    FpvdTree tq = FpvdTree::build(pts);
    PathLocator loc = PathLocator::build(tq);
    std::vector<ConvexPolygon> queries;
    for (int i = 0; i < 1000; ++i) {
        queries.push_back(bench::random_query_polygon(rng, tq.hull(), tq.mec().circle, 64));
    }
    int total = 200000;
    auto q0 = clock_type::now();
    long long guard = 0;
    for (int i = 0; i < total; ++i) {
        guard += query_polygon(tq, loc, queries[i % queries.size()]).stats.path_steps;
    }
    double qps = total / seconds_since(q0);

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "build n=1e6 in %.2f s (<=15), VmPeak %.2f GiB (<=1), polygon queries "
                  "%.0f/s (>=1e5) [checksum %lld]",
                  build_s, vm_peak_kb / (1024.0 * 1024.0), qps, guard);
    report(7, build_s <= 15.0 && vm_peak_kb <= 1024 * 1024 && qps >= 1e5, buf);
}

void criterion_8() {
    std::mt19937_64 rng(48);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    int trials = 200;
    int tangent_bad = 0, overlap_bad = 0, reduce_bad = 0, reduce_done = 0;

    for (int trial = 0; trial < trials; ++trial) {
        auto pts = random_points(rng, 5 + (int)(rng() % 40), 8.0);
        FpvdTree t = FpvdTree::build(pts);
        PathLocator loc = PathLocator::build(t);
        const Circle& cp = t.mec().circle;

        // (a) Q tangent to the enclosing circle: exact trivial answer.
        double a = ang(rng);
        Point u{std::cos(a), std::sin(a)};
        Point tp = cp.center + cp.radius * u;
        Point td{-u.y, u.x};
        double s = 0.4 * cp.radius, w = 0.6 * cp.radius;
        ConvexPolygon tq = make_polygon({tp - s * td, tp + s * td, tp + s * td + w * u,
                                         tp - s * td + w * u});
        QueryResult rt = query_polygon(t, loc, tq);
        if (rt.status != QueryStatus::SEPARATING || !rt.trivial_mec ||
            rt.circle.radius != cp.radius || rt.circle.center.x != cp.center.x ||
            rt.circle.center.y != cp.center.y) {
            ++tangent_bad;
        }

        // (b) Q overlapping the hull.
        Point hv = t.hull()[(int)(rng() % t.hull().size())];
        double hs = 0.3 * std::max(cp.radius, 1.0);
        ConvexPolygon ov = make_polygon({{hv.x - hs, hv.y - hs},
                                         {hv.x + hs, hv.y - hs},
                                         {hv.x + hs, hv.y + hs},
                                         {hv.x - hs, hv.y + hs}});
        if (query_polygon(t, loc, ov).status != QueryStatus::NO_SEPARATING_CIRCLE) {
            ++overlap_bad;
        }

        // (c) q = q' chain reduction, bit-for-bit against query_point.
        for (int attempt = 0; attempt < 20; ++attempt) {
            double b = ang(rng);
            Point d{std::cos(b), std::sin(b)};
            Point v = t.hull()[extreme_vertex(t.hull(), d)];
            Point apex = v + (0.05 * cp.radius) * d;
            if (dist(apex, cp.center) >= cp.radius * 0.999) continue;
            Point tdir{-d.y, d.x};
            ConvexPolygon tri;
            try {
                tri = make_polygon({apex, apex + 3.0 * cp.radius * (d + tdir),
                                    apex + 3.0 * cp.radius * (d - tdir)});
            } catch (const NotConvex&) {
                continue;
            }
            InternalTangents tg;
            try {
                tg = internal_tangents(t.hull(), tri);
            } catch (const PolygonsIntersect&) {
                continue;
            }
            if (dist(tg.q_first, tg.q_second) > 1e-9) continue;
            QueryResult rp = query_polygon(t, loc, tri);
            QueryResult rq = query_point(t, loc, tg.q_first);
            ++reduce_done;
            if (rp.status != rq.status || rp.circle.center.x != rq.circle.center.x ||
                rp.circle.center.y != rq.circle.center.y ||
                rp.circle.radius != rq.circle.radius) {
                ++reduce_bad;
            }
            break;
        }
    }

    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "tangent-MEC bad=%d, overlap bad=%d, q=q' reduction bad=%d (%d built)",
                  tangent_bad, overlap_bad, reduce_bad, reduce_done);
    report(8, tangent_bad == 0 && overlap_bad == 0 && reduce_bad == 0 && reduce_done >= 150,
           buf);
}

}  // namespace

int main() {
    auto t0 = clock_type::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("total: %d/8 criteria passed in %.1f s\n", 8 - failures,
                seconds_since(t0));
    return failures;
}
