#include "circsep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

using nlohmann::json;

namespace circsep::io {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

double num(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + ": not finite");
    return v;
}

Point point_of(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + ": expected [x,y]");
    return {num(j[0], what), num(j[1], what)};
}

std::vector<Point> points_of(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<Point> pts;
    for (const auto& e : j) pts.push_back(point_of(e, what));
    return pts;
}

void emit_point(std::string& out, Point p) {
    out += '[';
    out += fmt17(p.x);
    out += ',';
    out += fmt17(p.y);
    out += ']';
}

}  // namespace

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // JSON parsers read "-0" as integer zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Instance parse_instance(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("points")) throw ParseError("missing \"points\"");
    Instance inst;
    inst.points = points_of(j["points"], "points");
    for (const Point& p : inst.points) {
        if (std::abs(p.x) > COORD_LIMIT || std::abs(p.y) > COORD_LIMIT) {
            throw ParseError("coordinate exceeds the documented range");
        }
    }
    if (j.contains("queries")) {
        if (!j["queries"].is_array()) throw ParseError("queries: expected an array");
        for (const auto& q : j["queries"]) {
            if (!q.is_object() || !q.contains("type")) throw ParseError("query: missing type");
            std::string type = q["type"].get<std::string>();
            if (type == "point") {
                inst.queries.emplace_back(point_of(q.at("point"), "query point"));
            } else if (type == "circle") {
                double r = num(q.at("radius"), "query radius");
                if (r < 0) throw ParseError("query radius: negative");
                inst.queries.emplace_back(Circle{point_of(q.at("center"), "query center"), r});
            } else if (type == "polygon") {
                auto vs = points_of(q.at("vertices"), "query vertices");
                try {
                    inst.queries.emplace_back(make_polygon(vs));
                } catch (const NotConvex&) {
                    throw ParseError("query vertices: not a convex polygon");
                }
            } else {
                throw ParseError("query: unknown type \"" + type + "\"");
            }
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string snapshot_to_json(const FpvdTree& t) {
    std::string out;
    out.reserve(256 + 64 * (t.sites().size() + t.nodes().size()));
    out += "{\"format\":\"";
    out += SNAPSHOT_FORMAT;
    out += "\",\"n_distinct\":" + std::to_string(t.distinct_points());
    out += ",\"root\":" + std::to_string(t.root());
    out += ",\"sites\":[";
    for (size_t i = 0; i < t.sites().size(); ++i) {
        if (i) out += ',';
        emit_point(out, t.sites()[i]);
    }
    out += "],\"site_source\":[";
    for (size_t i = 0; i < t.site_source().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.site_source()[i]);
    }
    out += "],\"mec\":{\"center\":";
    emit_point(out, t.mec().circle.center);
    out += ",\"radius\":" + fmt17(t.mec().circle.radius);
    out += ",\"support\":[";
    for (size_t i = 0; i < t.mec().support.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.mec().support[i]);
    }
    out += "]},\"nodes\":[";
    for (size_t i = 0; i < t.nodes().size(); ++i) {
        const FpvdNode& n = t.nodes()[i];
        if (i) out += ',';
        out += "{\"position\":";
        emit_point(out, n.position);
        out += ",\"defining_sites\":[";
        for (size_t k = 0; k < n.defining_sites.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(n.defining_sites[k]);
        }
        out += "],\"parent\":" + std::to_string(n.parent);
        out += ",\"edge_sites\":[" + std::to_string(n.edge_sites[0]) + ',' +
               std::to_string(n.edge_sites[1]) + "]}";
    }
    out += "],\"rays\":[";
    for (size_t i = 0; i < t.rays().size(); ++i) {
        const FpvdRay& r = t.rays()[i];
        if (i) out += ',';
        out += "{\"origin\":" + std::to_string(r.origin);
        out += ",\"direction\":";
        emit_point(out, r.direction);
        out += ",\"sites\":[" + std::to_string(r.sites[0]) + ',' +
               std::to_string(r.sites[1]) + "]}";
    }
    out += "],\"regions\":[";
    for (size_t i = 0; i < t.region_boundaries().size(); ++i) {
        if (i) out += ',';
        out += '[';
        const auto& reg = t.region_boundaries()[i];
        for (size_t k = 0; k < reg.size(); ++k) {
            if (k) out += ',';
            out += '[';
            out += reg[k].is_ray ? '1' : '0';
            out += ',' + std::to_string(reg[k].index) + ']';
        }
        out += ']';
    }
    out += "]}";
    return out;
}

FpvdTree snapshot_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("format")) throw ParseError("snapshot: missing format");
    std::string fmt = j["format"].get<std::string>();
    if (fmt != SNAPSHOT_FORMAT) throw SnapshotVersionMismatch(fmt);

    std::vector<Point> sites = points_of(j.at("sites"), "sites");
    std::vector<int> source = j.at("site_source").get<std::vector<int>>();

    MecResult mec;
    mec.circle.center = point_of(j.at("mec").at("center"), "mec center");
    mec.circle.radius = num(j.at("mec").at("radius"), "mec radius");
    mec.support = j.at("mec").at("support").get<std::vector<int>>();

    std::vector<FpvdNode> nodes;
    for (const auto& e : j.at("nodes")) {
        FpvdNode n;
        n.position = point_of(e.at("position"), "node position");
        n.defining_sites = e.at("defining_sites").get<std::vector<int>>();
        n.parent = e.at("parent").get<int>();
        auto es = e.at("edge_sites").get<std::vector<int>>();
        if (es.size() != 2) throw ParseError("node edge_sites: expected 2 entries");
        n.edge_sites = {es[0], es[1]};
        nodes.push_back(std::move(n));
    }
    // children and depth are derivable; rebuild rather than trust the file.
    for (int i = 0; i < (int)nodes.size(); ++i) {
        if (nodes[i].parent >= 0) nodes[nodes[i].parent].children.push_back(i);
    }
    int root = j.at("root").get<int>();
    if (root < 0 || root >= (int)nodes.size()) throw ParseError("snapshot: bad root index");
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : nodes[v].children) {
            nodes[c].depth = nodes[v].depth + 1;
            stack.push_back(c);
        }
    }

    std::vector<FpvdRay> rays;
    for (const auto& e : j.at("rays")) {
        FpvdRay r;
        r.origin = e.at("origin").get<int>();
        r.direction = point_of(e.at("direction"), "ray direction");
        auto rs = e.at("sites").get<std::vector<int>>();
        if (rs.size() != 2) throw ParseError("ray sites: expected 2 entries");
        r.sites = {rs[0], rs[1]};
        rays.push_back(r);
    }

    std::vector<std::vector<RegionRef>> regions;
    for (const auto& re : j.at("regions")) {
        std::vector<RegionRef> reg;
        for (const auto& e : re) {
            if (!e.is_array() || e.size() != 2) throw ParseError("region ref: expected [flag,idx]");
            reg.push_back({e[0].get<int>() != 0, e[1].get<int>()});
        }
        regions.push_back(std::move(reg));
    }

    return FpvdTree::from_parts(std::move(sites), std::move(source), std::move(nodes),
                                std::move(rays), std::move(regions), root, std::move(mec),
                                j.at("n_distinct").get<int>());
}

void save_snapshot(const FpvdTree& tree, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << snapshot_to_json(tree) << '\n';
}

FpvdTree load_snapshot(const std::string& path) {
    return snapshot_from_json(read_file(path));
}

std::string record_to_json(const ResultRecord& rec) {
    std::string out = "{\"index\":" + std::to_string(rec.index);
    out += ",\"status\":\"";
    out += rec.result.status == QueryStatus::SEPARATING ? "separating" : "no_separating_circle";
    out += '"';
    if (rec.result.status == QueryStatus::SEPARATING) {
        out += ",\"center\":";
        emit_point(out, rec.result.circle.center);
        out += ",\"radius\":" + fmt17(rec.result.circle.radius);
        out += ",\"tangency\":";
        if (rec.result.tangency) {
            emit_point(out, *rec.result.tangency);
        } else {
            out += "null";
        }
        out += ",\"trivial_mec\":";
        out += rec.result.trivial_mec ? "true" : "false";
    }
    out += ",\"path_steps\":" + std::to_string(rec.result.stats.path_steps);
    out += ",\"chain_steps\":" + std::to_string(rec.result.stats.chain_steps);
    out += ",\"elapsed_ns\":" + std::to_string(rec.elapsed_ns);
    if (rec.oracle_radius) out += ",\"oracle_radius\":" + fmt17(*rec.oracle_radius);
    if (rec.match) {
        out += ",\"match\":";
        out += *rec.match ? "true" : "false";
    }
    out += '}';
    return out;
}

}  // namespace circsep::io
