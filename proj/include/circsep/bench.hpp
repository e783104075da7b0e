#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circsep/engine.hpp"

// Scaling benchmark: step counts and wall time per query over an (n, m) grid.
// The site generator is an eccentric ellipse, which drives the diagram toward
// its worst case (a path of ~n/4 nodes), so path_steps growth is measured
// against the deepest trees the structure can produce.

namespace circsep::bench {

struct Config {
    std::vector<int> n_values;
    std::vector<int> m_values;
    int queries_per_cell = 10000;
    uint64_t seed = 42;
};

struct Cell {
    int n = 0;
    int m = 0;
    int queries = 0;
    double build_ms = 0.0;
    double mean_path_steps = 0.0;
    int max_path_steps = 0;
    double mean_chain_steps = 0.0;
    int max_chain_steps = 0;
    double mean_total_steps = 0.0;
    int max_total_steps = 0;
    double ns_per_query = 0.0;
};

// Sites on an eccentric ellipse (all on the hull, deep diagram).
std::vector<Point> ellipse_sites(int n);

// Random convex m-gon disjoint from `hull` but usually intersecting the
// enclosing circle `cp`, so queries exercise the search rather than the
// trivial minimum-enclosing-circle path: the polygon sits just beyond a
// random support line of the hull.
ConvexPolygon random_query_polygon(std::mt19937_64& rng, const ConvexPolygon& hull,
                                   const Circle& cp, int m);

std::vector<Cell> run(const Config& cfg);

std::string table_json(const std::vector<Cell>& cells);
std::string table_text(const std::vector<Cell>& cells);

// Least-squares fit y = a + b*x returning the coefficient of determination;
// used by the acceptance suite to check logarithmic step growth.
struct LinearFit {
    double a = 0.0;
    double b = 0.0;
    double r2 = 1.0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace circsep::bench
