#include "circsep/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "circsep/io.hpp"

namespace circsep::bench {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

std::vector<Point> ellipse_sites(int n) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * M_PI * i / n;
        pts.push_back({10.0 * std::cos(a), 1.0 * std::sin(a)});
    }
    return pts;
}

ConvexPolygon random_query_polygon(std::mt19937_64& rng, const ConvexPolygon& hull,
                                   const Circle& cp, int m) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double dir = ang(rng);
    Point u{std::cos(dir), std::sin(dir)};
    Point sv = hull[extreme_vertex(hull, u)];
    double support = dot(sv, u);

    double qr = (0.05 + 0.45 * uni(rng)) * cp.radius;
    Point center = sv + (qr + 0.3 * uni(rng) * cp.radius) * u;
    // Equally spaced angles with jitter: strictly convex, exactly m vertices.
    std::uniform_real_distribution<double> jit(-0.3, 0.3);
    std::vector<Point> vs;
    vs.reserve(m);
    double phase = ang(rng);
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        double a = phase + 2.0 * M_PI * (i + 0.5 * jit(rng)) / m;
        vs.push_back(center + qr * Point{std::cos(a), std::sin(a)});
    }
    for (const Point& v : vs) lo = std::min(lo, dot(v, u));
    // Snap the polygon onto the hull's support line (small positive margin):
    // it stays disjoint from the hull but usually pokes into cp.
    double margin = (1e-4 + 0.05 * uni(rng)) * cp.radius;
    Point shift = (support + margin - lo) * u;
    for (Point& v : vs) v = v + shift;
    return make_polygon(vs);
}

std::vector<Cell> run(const Config& cfg) {
    std::vector<Cell> cells;
    for (int n : cfg.n_values) {
        auto t0 = clock_type::now();
        FpvdTree tree = FpvdTree::build(ellipse_sites(n), cfg.seed);
        PathLocator loc = PathLocator::build(tree);
        double build_ms = ms_since(t0);
        for (int m : cfg.m_values) {
            Cell cell;
            cell.n = n;
            cell.m = m;
            cell.queries = cfg.queries_per_cell;
            cell.build_ms = build_ms;
            std::mt19937_64 rng(cfg.seed ^ (uint64_t)n * 0x9e3779b97f4a7c15ull ^ (uint64_t)m);
            long long sum_path = 0, sum_chain = 0;
            auto q0 = clock_type::now();
            for (int i = 0; i < cfg.queries_per_cell; ++i) {
                ConvexPolygon q = random_query_polygon(rng, tree.hull(), tree.mec().circle, m);
                QueryResult r = query_polygon(tree, loc, q);
                sum_path += r.stats.path_steps;
                sum_chain += r.stats.chain_steps;
                cell.max_path_steps = std::max(cell.max_path_steps, r.stats.path_steps);
                cell.max_chain_steps = std::max(cell.max_chain_steps, r.stats.chain_steps);
                cell.max_total_steps = std::max(cell.max_total_steps,
                                                r.stats.path_steps + r.stats.chain_steps);
            }
            double elapsed_ms = ms_since(q0);
            if (cfg.queries_per_cell > 0) {
                cell.mean_path_steps = (double)sum_path / cfg.queries_per_cell;
                cell.mean_chain_steps = (double)sum_chain / cfg.queries_per_cell;
                cell.mean_total_steps = (double)(sum_path + sum_chain) / cfg.queries_per_cell;
                cell.ns_per_query = elapsed_ms * 1e6 / cfg.queries_per_cell;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::string table_json(const std::vector<Cell>& cells) {
    std::string out = "{\"cells\":[";
    for (size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (i) out += ',';
        out += "{\"n\":" + std::to_string(c.n) + ",\"m\":" + std::to_string(c.m);
        out += ",\"queries\":" + std::to_string(c.queries);
        out += ",\"build_ms\":" + io::fmt17(c.build_ms);
        out += ",\"mean_path_steps\":" + io::fmt17(c.mean_path_steps);
        out += ",\"max_path_steps\":" + std::to_string(c.max_path_steps);
        out += ",\"mean_chain_steps\":" + io::fmt17(c.mean_chain_steps);
        out += ",\"max_chain_steps\":" + std::to_string(c.max_chain_steps);
        out += ",\"mean_total_steps\":" + io::fmt17(c.mean_total_steps);
        out += ",\"max_total_steps\":" + std::to_string(c.max_total_steps);
        out += ",\"ns_per_query\":" + io::fmt17(c.ns_per_query) + '}';
    }
    out += "]}";
    return out;
}

std::string table_text(const std::vector<Cell>& cells) {
    std::ostringstream out;
    char line[200];
    std::snprintf(line, sizeof(line), "%9s %6s %8s | %10s %8s | %10s %8s | %10s\n", "n", "m",
                  "queries", "mean_path", "max_path", "mean_chn", "max_chn", "ns/query");
    out << line;
    for (const Cell& c : cells) {
        std::snprintf(line, sizeof(line), "%9d %6d %8d | %10.2f %8d | %10.2f %8d | %10.0f\n",
                      c.n, c.m, c.queries, c.mean_path_steps, c.max_path_steps,
                      c.mean_chain_steps, c.max_chain_steps, c.ns_per_query);
        out << line;
    }
    return out.str();
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    size_t n = x.size();
    if (n < 2) return f;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return f;
    f.b = (n * sxy - sx * sy) / denom;
    f.a = (sy - f.b * sx) / n;
    double ss_res = 0, ss_tot = 0, ybar = sy / n;
    for (size_t i = 0; i < n; ++i) {
        double e = y[i] - (f.a + f.b * x[i]);
        ss_res += e * e;
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    f.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return f;
}

}  // namespace circsep::bench
