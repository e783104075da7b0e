#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "circsep/bench.hpp"
#include "circsep/io.hpp"
#include "circsep/svg.hpp"

using namespace circsep;

namespace {

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_DEGENERATE = 3;
constexpr int EXIT_SNAPSHOT_VERSION = 4;

using clock_type = std::chrono::steady_clock;

QueryResult dispatch(const FpvdTree& tree, const PathLocator& loc,
                     const oracle::QueryObject& q) {
    if (const Point* p = std::get_if<Point>(&q)) return query_point(tree, loc, *p);
    if (const Circle* c = std::get_if<Circle>(&q)) return query_circle(tree, loc, *c);
    return query_polygon(tree, loc, std::get<ConvexPolygon>(q));
}

int cmd_build(const std::string& input, const std::string& snapshot, uint64_t seed) {
    io::Instance inst;
    try {
        inst = io::load_instance(input);
    } catch (const io::ParseError& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PARSE;
    }
    auto t0 = clock_type::now();
    FpvdTree tree;
    try {
        tree = FpvdTree::build(inst.points, seed);
    } catch (const TooFewPoints& e) {
        std::cerr << e.what() << "\n";
        return EXIT_DEGENERATE;
    }
    double build_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    io::save_snapshot(tree, snapshot);
    std::cout << "{\"n\":" << inst.points.size() << ",\"distinct\":" << tree.distinct_points()
              << ",\"h\":" << tree.sites().size() << ",\"nodes\":" << tree.nodes().size()
              << ",\"rays\":" << tree.rays().size() << ",\"build_ms\":" << io::fmt17(build_ms)
              << "}\n";
    return 0;
}

int cmd_query(const std::string& snapshot, const std::string& queries, bool with_oracle,
              const std::string& svg_dir) {
    FpvdTree tree;
    io::Instance inst;
    try {
        tree = io::load_snapshot(snapshot);
        inst = io::load_instance(queries);
    } catch (const io::SnapshotVersionMismatch& e) {
        std::cerr << e.what() << "\n";
        return EXIT_SNAPSHOT_VERSION;
    } catch (const io::ParseError& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PARSE;
    }
    PathLocator loc = PathLocator::build(tree);
    if (!svg_dir.empty()) std::filesystem::create_directories(svg_dir);

    for (size_t i = 0; i < inst.queries.size(); ++i) {
        const oracle::QueryObject& q = inst.queries[i];
        auto t0 = clock_type::now();
        QueryResult r = dispatch(tree, loc, q);
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - t0);

        io::ResultRecord rec{(int)i, r, (long long)ns.count(), std::nullopt, std::nullopt};
        if (with_oracle) {
            QueryResult o = oracle::brute_min_separating_circle(tree.sites(), q);
            bool match = o.status == r.status;
            if (match && r.status == QueryStatus::SEPARATING) {
                rec.oracle_radius = o.circle.radius;
                double tol = 1e-6 * std::max(1.0, o.circle.radius);
                match = std::abs(o.circle.radius - r.circle.radius) <= tol &&
                        dist(o.circle.center, r.circle.center) <= tol;
            }
            rec.match = match;
        }
        std::cout << io::record_to_json(rec) << "\n";

        if (!svg_dir.empty()) {
            std::ofstream out(svg_dir + "/query_" + std::to_string(i) + ".svg");
            out << svg::render_query(tree, q, r);
        }
    }
    return 0;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<int>& ms, int queries,
              uint64_t seed) {
    bench::Config cfg;
    cfg.n_values = ns;
    cfg.m_values = ms;
    cfg.queries_per_cell = queries;
    cfg.seed = seed;
    auto cells = bench::run(cfg);
    std::cout << bench::table_json(cells) << "\n";
    std::cerr << bench::table_text(cells);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum separating circle queries over a preprocessed point set"};
    app.require_subcommand(1);
    uint64_t seed = 42;
    app.add_option("--seed", seed, "Seed for all randomized algorithms")->capture_default_str();

    std::string input, snapshot, queries, svg_dir;
    bool with_oracle = false;

    auto* build = app.add_subcommand("build", "Preprocess an instance into a snapshot");
    build->add_option("input", input, "Instance JSON file")->required();
    build->add_option("snapshot", snapshot, "Snapshot output path")->required();

    auto* query = app.add_subcommand("query", "Run a query file against a snapshot");
    query->add_option("snapshot", snapshot, "Snapshot path")->required();
    query->add_option("queries", queries, "Query JSON file")->required();
    query->add_flag("--oracle", with_oracle, "Cross-check each query against the brute oracle");
    query->add_option("--svg", svg_dir, "Write one SVG figure per query into this directory");

    std::vector<int> n_values{1024, 4096, 16384, 65536};
    std::vector<int> m_values{64};
    int bench_queries = 10000;
    auto* bench_cmd = app.add_subcommand("bench", "Step-count and latency scaling sweep");
    bench_cmd->add_option("--n", n_values, "Site counts")->delimiter(',');
    bench_cmd->add_option("--m", m_values, "Query polygon sizes")->delimiter(',');
    bench_cmd->add_option("--queries", bench_queries, "Queries per (n,m) cell")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, snapshot, seed);
        if (query->parsed()) return cmd_query(snapshot, queries, with_oracle, svg_dir);
        return cmd_bench(n_values, m_values, bench_queries, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
