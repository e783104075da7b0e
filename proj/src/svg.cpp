#include "circsep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace circsep::svg {

namespace {

// Styling constants: muted palette, hairline strokes relative to viewport.
constexpr const char* COLOR_POINTS = "#1f3b73";
constexpr const char* COLOR_HULL = "#6688cc";
constexpr const char* COLOR_QUERY = "#b0413e";
constexpr const char* COLOR_ANSWER = "#2a7f4f";
constexpr const char* COLOR_TANGENCY = "#e09f1f";

struct Box {
    double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
    void add(Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    void add(const Circle& c) {
        add(Point{c.center.x - c.radius, c.center.y - c.radius});
        add(Point{c.center.x + c.radius, c.center.y + c.radius});
    }
};

struct Mapper {
    double scale = 1.0;
    double ox = 0.0, oy = 0.0;  // world origin of the viewport

    explicit Mapper(const Box& b) {
        double w = std::max(b.xmax - b.xmin, 1e-9);
        double h = std::max(b.ymax - b.ymin, 1e-9);
        double span = std::max(w, h) * (1.0 + 2.0 * MARGIN_FRACTION);
        scale = VIEWPORT / span;
        ox = 0.5 * (b.xmin + b.xmax) - 0.5 * span;
        oy = 0.5 * (b.ymin + b.ymax) + 0.5 * span;  // y flips: SVG grows down
    }
    double x(double wx) const { return (wx - ox) * scale; }
    double y(double wy) const { return (oy - wy) * scale; }
};

std::string f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void polygon_path(std::ostringstream& out, const Mapper& m, const std::vector<Point>& vs,
                  const char* color, bool close) {
    out << "<path d=\"";
    for (size_t i = 0; i < vs.size(); ++i) {
        out << (i == 0 ? 'M' : 'L') << f2(m.x(vs[i].x)) << ' ' << f2(m.y(vs[i].y));
    }
    if (close) out << 'Z';
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
}

void circle_elem(std::ostringstream& out, const Mapper& m, const Circle& c,
                 const char* color) {
    out << "<circle cx=\"" << f2(m.x(c.center.x)) << "\" cy=\"" << f2(m.y(c.center.y))
        << "\" r=\"" << f2(c.radius * m.scale) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
}

void dot(std::ostringstream& out, const Mapper& m, Point p, double r, const char* color) {
    out << "<circle cx=\"" << f2(m.x(p.x)) << "\" cy=\"" << f2(m.y(p.y)) << "\" r=\"" << r
        << "\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_query(const FpvdTree& tree, const oracle::QueryObject& q,
                         const QueryResult& res) {
    Box box;
    for (const Point& p : tree.sites()) box.add(p);
    if (const Point* p = std::get_if<Point>(&q)) {
        box.add(*p);
    } else if (const Circle* c = std::get_if<Circle>(&q)) {
        box.add(*c);
    } else {
        for (const Point& p : std::get<ConvexPolygon>(q).vertices()) box.add(p);
    }
    if (res.status == QueryStatus::SEPARATING) box.add(res.circle);
    Mapper m(box);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << VIEWPORT
        << "\" height=\"" << VIEWPORT << "\" viewBox=\"0 0 " << VIEWPORT << ' ' << VIEWPORT
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    polygon_path(out, m, tree.hull().vertices(), COLOR_HULL, true);
    for (const Point& p : tree.sites()) dot(out, m, p, 2.5, COLOR_POINTS);

    if (const Point* p = std::get_if<Point>(&q)) {
        dot(out, m, *p, 4.0, COLOR_QUERY);
    } else if (const Circle* c = std::get_if<Circle>(&q)) {
        circle_elem(out, m, *c, COLOR_QUERY);
    } else {
        polygon_path(out, m, std::get<ConvexPolygon>(q).vertices(), COLOR_QUERY, true);
    }

    if (res.status == QueryStatus::SEPARATING) {
        circle_elem(out, m, res.circle, COLOR_ANSWER);
        dot(out, m, res.circle.center, 2.5, COLOR_ANSWER);
        if (res.tangency) dot(out, m, *res.tangency, 4.0, COLOR_TANGENCY);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace circsep::svg
