#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "circsep/convex.hpp"
#include "circsep/geom.hpp"
#include "circsep/mec.hpp"

// Farthest-point Voronoi diagram of a planar point set, rooted at the center
// of the minimum enclosing circle. The 1-skeleton is a tree whose leaves are
// unbounded rays; only convex-hull vertices own regions. Preprocessing for
// every query the engine answers.

namespace circsep {

struct TooFewPoints : GeometryError {
    TooFewPoints() : GeometryError("fpvd: fewer than 2 distinct points") {}
};
struct NoIntersection : GeometryError {
    NoIntersection() : GeometryError("ray_exit_of_region: ray misses the region boundary") {}
};

struct FpvdNode {
    Point position;
    std::vector<int> defining_sites;  // 2 or 3 site indices; more when cocircular
    int parent = -1;
    std::array<int, 2> edge_sites{-1, -1};  // bisector pair of the edge to parent
    std::vector<int> children;
    int depth = 0;
};

struct FpvdRay {
    int origin = -1;               // node the ray leaves from
    Point direction;               // unit vector, leafward
    std::array<int, 2> sites{-1, -1};  // bounding site pair (a hull edge)
};

// Reference to a boundary feature of a region: a node or a ray.
struct RegionRef {
    bool is_ray = false;
    int index = -1;
    friend bool operator==(const RegionRef&, const RegionRef&) = default;
};

struct DiagramLocation {
    enum class Kind { NODE, EDGE_POINT, RAY_POINT };
    Kind kind = Kind::NODE;
    int index = -1;  // node index, child-node index of the edge, or ray index
    Point position;
    std::array<int, 2> sites{-1, -1};  // bounding site pair at the location
};

class FpvdTree {
  public:
    // Throws TooFewPoints when fewer than 2 distinct points remain after
    // exact-coordinate deduplication.
    static FpvdTree build(const std::vector<Point>& points, uint64_t seed = 42);

    const std::vector<Point>& sites() const { return sites_; }
    const std::vector<int>& site_source() const { return site_source_; }
    const ConvexPolygon& hull() const { return hull_; }
    const std::vector<FpvdNode>& nodes() const { return nodes_; }
    const std::vector<FpvdRay>& rays() const { return rays_; }
    const std::vector<std::vector<RegionRef>>& region_boundaries() const { return regions_; }
    int root() const { return root_; }
    const MecResult& mec() const { return mec_; }
    int distinct_points() const { return n_distinct_; }

    double rho(const DiagramLocation& loc) const;
    double rho_node(int node) const;

    // Minimum P-circle centered at y (O(h) scan over hull sites).
    Circle min_pcircle_at(Point y) const;

    // First boundary point of R(site) hit by the ray, traversed from its
    // anchor. Throws NoIntersection when the ray misses the boundary.
    DiagramLocation ray_exit_of_region(int site, const DirectedLine& ray) const;

    DiagramLocation node_location(int node) const;

    // Structure audit used by tests and the CLI; empty when all invariants
    // hold at tolerance.
    std::vector<std::string> validate() const;

    // Raw-field constructor for snapshot loading; runs no checks.
    static FpvdTree from_parts(std::vector<Point> sites, std::vector<int> site_source,
                               std::vector<FpvdNode> nodes, std::vector<FpvdRay> rays,
                               std::vector<std::vector<RegionRef>> regions, int root,
                               MecResult mec, int n_distinct);

  private:
    std::vector<Point> sites_;       // hull vertices, CCW
    std::vector<int> site_source_;   // site -> index into the build input
    ConvexPolygon hull_;
    std::vector<FpvdNode> nodes_;
    std::vector<FpvdRay> rays_;
    std::vector<std::vector<RegionRef>> regions_;  // per site
    int root_ = -1;
    MecResult mec_;
    int n_distinct_ = 0;

    double scale_ = 1.0;
};

}  // namespace circsep
