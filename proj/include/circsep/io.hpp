#pragma once

#include <optional>
#include <string>

#include "circsep/oracle.hpp"

// Instance/snapshot/result serialization. Everything is UTF-8 JSON; numbers
// are written with 17 significant digits so doubles round-trip exactly.

namespace circsep::io {

struct ParseError : GeometryError {
    explicit ParseError(const std::string& what) : GeometryError("parse: " + what) {}
};
struct SnapshotVersionMismatch : GeometryError {
    explicit SnapshotVersionMismatch(const std::string& got)
        : GeometryError("snapshot: unsupported format \"" + got + "\"") {}
};

inline constexpr const char* SNAPSHOT_FORMAT = "fpvd-snapshot/1";

struct Instance {
    std::vector<Point> points;
    std::vector<oracle::QueryObject> queries;
};

// {"points": [[x,y],...], "queries": [{"type": "point"|"circle"|"polygon",
//  "point": [x,y] | "center": [x,y], "radius": r | "vertices": [[x,y],...]}]}
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string snapshot_to_json(const FpvdTree& tree);
FpvdTree snapshot_from_json(const std::string& text);
void save_snapshot(const FpvdTree& tree, const std::string& path);
FpvdTree load_snapshot(const std::string& path);

struct ResultRecord {
    int index = 0;
    QueryResult result;
    long long elapsed_ns = 0;
    std::optional<double> oracle_radius;  // present under --oracle
    std::optional<bool> match;
};

// One JSON object per line (JSON-lines stream).
std::string record_to_json(const ResultRecord& rec);

// 17-significant-digit decimal, the round-trip-exact double format used in
// every writer above.
std::string fmt17(double v);

}  // namespace circsep::io
