#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "circsep/engine.hpp"
#include "circsep/io.hpp"

namespace py = pybind11;
using namespace circsep;

namespace {

using XY = std::pair<double, double>;

Point to_point(const XY& p) { return {p.first, p.second}; }
XY from_point(Point p) { return {p.x, p.y}; }

// FpvdTree plus its path index, which every query needs.
struct Tree {
    FpvdTree tree;
    PathLocator locator;

    explicit Tree(FpvdTree t) : tree(std::move(t)), locator(PathLocator::build(tree)) {}
};

const char* status_name(QueryStatus s) {
    return s == QueryStatus::SEPARATING ? "separating" : "no_separating_circle";
}

}  // namespace

PYBIND11_MODULE(_circsep, m) {
    m.doc() = "Minimum separating circles over a preprocessed planar point set";

    py::register_exception<GeometryError>(m, "GeometryError");

    py::class_<QueryResult>(m, "QueryResult")
        .def_property_readonly("status",
                               [](const QueryResult& r) { return status_name(r.status); })
        .def_property_readonly("separating",
                               [](const QueryResult& r) {
                                   return r.status == QueryStatus::SEPARATING;
                               })
        .def_property_readonly("center",
                               [](const QueryResult& r) -> std::optional<XY> {
                                   if (r.status != QueryStatus::SEPARATING) return std::nullopt;
                                   return from_point(r.circle.center);
                               })
        .def_property_readonly("radius",
                               [](const QueryResult& r) -> std::optional<double> {
                                   if (r.status != QueryStatus::SEPARATING) return std::nullopt;
                                   return r.circle.radius;
                               })
        .def_property_readonly("tangency",
                               [](const QueryResult& r) -> std::optional<XY> {
                                   if (!r.tangency) return std::nullopt;
                                   return from_point(*r.tangency);
                               })
        .def_readonly("trivial_mec", &QueryResult::trivial_mec)
        .def_property_readonly("path_steps",
                               [](const QueryResult& r) { return r.stats.path_steps; })
        .def_property_readonly("chain_steps",
                               [](const QueryResult& r) { return r.stats.chain_steps; })
        .def("__repr__", [](const QueryResult& r) {
            if (r.status != QueryStatus::SEPARATING) return std::string("QueryResult(no_separating_circle)");
            return "QueryResult(r=" + io::fmt17(r.circle.radius) + ", center=(" +
                   io::fmt17(r.circle.center.x) + ", " + io::fmt17(r.circle.center.y) + "))";
        });

    py::class_<Tree>(m, "Tree")
        .def_static(
            "build",
            [](const std::vector<XY>& points, uint64_t seed) {
                std::vector<Point> pts;
                pts.reserve(points.size());
                for (const XY& p : points) pts.push_back(to_point(p));
                return Tree(FpvdTree::build(pts, seed));
            },
            py::arg("points"), py::arg("seed") = 42)
        .def_static("from_json",
                    [](const std::string& text) { return Tree(io::snapshot_from_json(text)); })
        .def_static("load", [](const std::string& path) { return Tree(io::load_snapshot(path)); })
        .def("to_json", [](const Tree& t) { return io::snapshot_to_json(t.tree); })
        .def("save", [](const Tree& t, const std::string& path) { io::save_snapshot(t.tree, path); },
             py::arg("path"))
        .def_property_readonly("size", [](const Tree& t) { return t.tree.distinct_points(); })
        .def_property_readonly("hull",
                               [](const Tree& t) {
                                   std::vector<XY> out;
                                   for (int i = 0; i < t.tree.hull().size(); ++i)
                                       out.push_back(from_point(t.tree.hull()[i]));
                                   return out;
                               })
        .def_property_readonly("mec",
                               [](const Tree& t) {
                                   const Circle& c = t.tree.mec().circle;
                                   return std::make_pair(from_point(c.center), c.radius);
                               })
        .def("query_point",
             [](const Tree& t, const XY& q) { return query_point(t.tree, t.locator, to_point(q)); },
             py::arg("q"))
        .def("query_circle",
             [](const Tree& t, const XY& center, double radius) {
                 return query_circle(t.tree, t.locator, {to_point(center), radius});
             },
             py::arg("center"), py::arg("radius"))
        .def("query_polygon",
             [](const Tree& t, const std::vector<XY>& vertices) {
                 std::vector<Point> vs;
                 vs.reserve(vertices.size());
                 for (const XY& p : vertices) vs.push_back(to_point(p));
                 return query_polygon(t.tree, t.locator, make_polygon(vs));
             },
             py::arg("vertices"))
        .def("validate", [](const Tree& t) { return t.tree.validate(); })
        .def("__repr__", [](const Tree& t) {
            return "Tree(n=" + std::to_string(t.tree.distinct_points()) +
                   ", hull=" + std::to_string(t.tree.hull().size()) + ")";
        });
}
