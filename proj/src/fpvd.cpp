#include "circsep/fpvd.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace circsep {

namespace {

// Coincident-node merge threshold, relative to rho. Must stay below the
// validate() equidistance tolerance: a merged node keeps one representative
// circumcenter, so the merge slack shows up as equidistance error.
constexpr double MERGE_REL = 1e-9;

struct Tri {
    std::array<int, 3> v;    // CCW
    std::array<int, 3> nbr;  // nbr[k] across the edge opposite v[k], -1 = hull
};

// Farthest-point Delaunay triangulation of sites in strictly convex CCW
// position, h >= 3. Randomized vertex removal and reinsertion with local
// flips; expected linear time. `hull_owner[i]` receives the triangle/slot of
// hull edge i -> i+1.
struct ConvexFarthestDelaunay {
    const std::vector<Point>& pts;
    int h;
    std::vector<Tri> tris;
    // Per current boundary edge keyed by its first vertex: (tri, slot).
    // After triangulation these are exactly the hull edges i -> i+1.
    std::vector<std::pair<int, int>> hull_owner;

    explicit ConvexFarthestDelaunay(const std::vector<Point>& sites, uint64_t seed)
        : pts(sites), h((int)sites.size()), hull_owner(sites.size(), {-1, -1}) {
        triangulate(seed);
    }

    // Flip when the opposite vertex lies strictly outside the circumcircle.
    bool must_flip(int a, int b, int c, int d) const {
        double mag = 0.0;
        double val = outcircle_value(pts[a], pts[b], pts[c], pts[d], &mag);
        return val > 1e-14 * mag;
    }

    void set_boundary_owner(int t) {
        for (int k = 0; k < 3; ++k) {
            if (tris[t].nbr[k] == -1) {
                int first = tris[t].v[(k + 1) % 3];
                hull_owner[first] = {t, k};
            }
        }
    }

    int slot_of_nbr(int t, int other) const {
        for (int k = 0; k < 3; ++k) {
            if (tris[t].nbr[k] == other) return k;
        }
        assert(false);
        return -1;
    }

    void replace_nbr(int t, int old_nbr, int new_nbr) {
        if (t < 0) return;
        tris[t].nbr[slot_of_nbr(t, old_nbr)] = new_nbr;
    }

    // Legalize the edge of `t` opposite slot `s` (the inserted vertex sits at
    // slot s). Iterative stack of (triangle, apex vertex id).
    void legalize(int t0, int s0) {
        std::vector<std::pair<int, int>> stack{{t0, tris[t0].v[s0]}};
        long guard = 0;
        while (!stack.empty()) {
            if (++guard > 64L * h + 4096) {
                throw GeometryError("fpvd: flip cascade did not terminate");
            }
            auto [t, apex] = stack.back();
            stack.pop_back();
            int s = -1;
            for (int k = 0; k < 3; ++k) {
                if (tris[t].v[k] == apex) s = k;
            }
            if (s < 0) continue;
            int o = tris[t].nbr[s];
            if (o < 0) continue;
            int so = slot_of_nbr(o, t);
            int p = tris[t].v[s];
            int u1 = tris[t].v[(s + 1) % 3];
            int u2 = tris[t].v[(s + 2) % 3];
            int q = tris[o].v[so];
            // t is CCW as (p, u1, u2).
            if (!must_flip(p, u1, u2, q)) continue;
            // Quad p, u1, q, u2 must be strictly convex to flip.
            if (orientation(pts[p], pts[u1], pts[q]) != Orientation::CCW ||
                orientation(pts[u1], pts[q], pts[u2]) != Orientation::CCW) {
                continue;
            }
            int X = tris[t].nbr[(s + 1) % 3];  // across (u2, p)
            int Y = tris[t].nbr[(s + 2) % 3];  // across (p, u1)
            int Z = -1, W = -1;
            for (int k = 0; k < 3; ++k) {
                int a = tris[o].v[(k + 1) % 3], b = tris[o].v[(k + 2) % 3];
                if (a == u1 && b == q) Z = tris[o].nbr[k];
                if (a == q && b == u2) W = tris[o].nbr[k];
            }
            tris[t] = Tri{{p, u1, q}, {Z, o, Y}};
            tris[o] = Tri{{p, q, u2}, {W, X, t}};
            replace_nbr(Z, o, t);
            replace_nbr(X, t, o);
            set_boundary_owner(t);
            set_boundary_owner(o);
            stack.push_back({t, apex});
            stack.push_back({o, apex});
        }
    }

    void triangulate(uint64_t seed) {
        if (h == 3) {
            tris.push_back(Tri{{0, 1, 2}, {-1, -1, -1}});
            set_boundary_owner(0);
            return;
        }
        std::vector<int> nxt(h), prv(h);
        for (int i = 0; i < h; ++i) {
            nxt[i] = (i + 1) % h;
            prv[i] = (i + h - 1) % h;
        }
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<int> alive(h);
        std::iota(alive.begin(), alive.end(), 0);
        std::vector<std::array<int, 3>> removal;  // (v, prev, next) at removal
        while ((int)alive.size() > 3) {
            size_t k = rng() % alive.size();
            int v = alive[k];
            alive[k] = alive.back();
            alive.pop_back();
            removal.push_back({v, prv[v], nxt[v]});
            nxt[prv[v]] = nxt[v];
            prv[nxt[v]] = prv[v];
        }
        std::sort(alive.begin(), alive.end());
        tris.push_back(Tri{{alive[0], alive[1], alive[2]}, {-1, -1, -1}});
        set_boundary_owner(0);

        for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
            auto [v, a, b] = *it;
            auto [ot, os] = hull_owner[a];  // triangle owning edge a -> b
            assert(ot >= 0 && tris[ot].v[(os + 1) % 3] == a && tris[ot].v[(os + 2) % 3] == b);
            int t = (int)tris.size();
            tris.push_back(Tri{{a, v, b}, {-1, ot, -1}});
            tris[ot].nbr[os] = t;
            hull_owner[a] = {t, 2};  // edge a -> v
            hull_owner[v] = {t, 0};  // edge v -> b
            legalize(t, 1);
        }
    }
};

struct RayHit {
    double t = std::numeric_limits<double>::infinity();
    Point position;
    bool valid = false;
};

RayHit ray_segment_hit(const DirectedLine& ray, Point a, Point b, double eps) {
    Point d = ray.direction;
    Point e = b - a;
    double denom = cross(d, e);
    Point w = a - ray.anchor;
    RayHit hit;
    if (std::abs(denom) < 1e-15 * std::max(1.0, norm(e))) return hit;
    double t = cross(w, e) / denom;
    double s = cross(w, d) / denom;
    double slen = norm(e);
    if (t < -eps || s < -eps / std::max(slen, 1e-300) || s > 1.0 + eps / std::max(slen, 1e-300)) {
        return hit;
    }
    hit.t = std::max(t, 0.0);
    hit.position = ray.anchor + hit.t * d;
    hit.valid = true;
    return hit;
}

RayHit ray_ray_hit(const DirectedLine& ray, Point origin, Point dir, double eps) {
    Point d = ray.direction;
    double denom = cross(d, dir);
    Point w = origin - ray.anchor;
    RayHit hit;
    if (std::abs(denom) < 1e-15) return hit;
    double t = cross(w, dir) / denom;
    double s = cross(w, d) / denom;
    if (t < -eps || s < -eps) return hit;
    hit.t = std::max(t, 0.0);
    hit.position = ray.anchor + hit.t * d;
    hit.valid = true;
    return hit;
}

}  // namespace

FpvdTree FpvdTree::from_parts(std::vector<Point> sites, std::vector<int> site_source,
                              std::vector<FpvdNode> nodes, std::vector<FpvdRay> rays,
                              std::vector<std::vector<RegionRef>> regions, int root,
                              MecResult mec, int n_distinct) {
    FpvdTree t;
    t.sites_ = std::move(sites);
    t.site_source_ = std::move(site_source);
    t.hull_ = ConvexPolygon::unchecked(t.sites_);
    t.nodes_ = std::move(nodes);
    t.rays_ = std::move(rays);
    t.regions_ = std::move(regions);
    t.root_ = root;
    t.mec_ = std::move(mec);
    t.n_distinct_ = n_distinct;
    for (const Point& p : t.sites_) t.scale_ = std::max({t.scale_, std::abs(p.x), std::abs(p.y)});
    return t;
}

FpvdTree FpvdTree::build(const std::vector<Point>& points, uint64_t seed) {
    // Exact-coordinate dedup; n counts distinct points.
    std::vector<Point> distinct;
    std::vector<int> distinct_src;
    {
        std::map<std::pair<double, double>, int> seen;
        for (size_t i = 0; i < points.size(); ++i) {
            auto key = std::make_pair(points[i].x, points[i].y);
            if (seen.emplace(key, (int)i).second) {
                distinct.push_back(points[i]);
                distinct_src.push_back((int)i);
            }
        }
    }
    if (distinct.size() < 2) throw TooFewPoints();

    FpvdTree t;
    t.n_distinct_ = (int)distinct.size();
    for (const Point& p : distinct) t.scale_ = std::max({t.scale_, std::abs(p.x), std::abs(p.y)});

    std::vector<int> hull_src;
    t.hull_ = convex_hull(distinct, &hull_src);
    t.sites_ = t.hull_.vertices();
    t.site_source_.clear();
    for (int i : hull_src) t.site_source_.push_back(distinct_src[i]);

    t.mec_ = minimum_enclosing_circle(distinct, seed);
    for (int& s : t.mec_.support) s = distinct_src[s];
    const Point cp = t.mec_.circle.center;
    const int h = (int)t.sites_.size();

    if (h == 2) {
        // Single-bisector degenerate tree: one node at c_P, two opposite rays.
        FpvdNode root;
        root.position = cp;
        root.defining_sites = {0, 1};
        t.nodes_.push_back(root);
        DirectedLine bis = bisector(t.sites_[0], t.sites_[1]);
        t.rays_.push_back({0, bis.direction, {0, 1}});
        t.rays_.push_back({0, {-bis.direction.x, -bis.direction.y}, {0, 1}});
        t.regions_ = {{{true, 0}, {false, 0}, {true, 1}},
                      {{true, 0}, {false, 0}, {true, 1}}};
        t.root_ = 0;
        return t;
    }

    ConvexFarthestDelaunay fd(t.sites_, seed);
    const int nt = (int)fd.tris.size();

    // Circumcenters; adjacency-connected coincident centers merge into one
    // node (cocircular degeneracies become a single high-degree vertex).
    std::vector<Point> centers(nt);
    std::vector<double> radii(nt);
    for (int i = 0; i < nt; ++i) {
        const Tri& tr = fd.tris[i];
        centers[i] = circumcenter(t.sites_[tr.v[0]], t.sites_[tr.v[1]], t.sites_[tr.v[2]]);
        radii[i] = dist(centers[i], t.sites_[tr.v[0]]);
    }
    std::vector<int> uf(nt);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int i = 0; i < nt; ++i) {
        for (int k = 0; k < 3; ++k) {
            int j = fd.tris[i].nbr[k];
            if (j < 0 || j < i) continue;
            double eps = MERGE_REL * std::max({1.0, radii[i], radii[j]});
            if (dist(centers[i], centers[j]) <= eps) uf[find(i)] = find(j);
        }
    }
    std::vector<int> cls(nt, -1);
    for (int i = 0; i < nt; ++i) {
        int r = find(i);
        if (cls[r] < 0) {
            cls[r] = (int)t.nodes_.size();
            FpvdNode node;
            node.position = centers[r];
            t.nodes_.push_back(node);
        }
        cls[i] = cls[r];
    }
    for (int i = 0; i < nt; ++i) {
        auto& def = t.nodes_[cls[i]].defining_sites;
        for (int k = 0; k < 3; ++k) def.push_back(fd.tris[i].v[k]);
    }
    for (FpvdNode& node : t.nodes_) {
        std::sort(node.defining_sites.begin(), node.defining_sites.end());
        node.defining_sites.erase(
            std::unique(node.defining_sites.begin(), node.defining_sites.end()),
            node.defining_sites.end());
    }

    // Tree adjacency from interior triangulation edges.
    std::vector<std::vector<std::pair<int, std::array<int, 2>>>> adj(t.nodes_.size());
    auto add_edge = [&](int a, int b, std::array<int, 2> pair) {
        adj[a].push_back({b, pair});
        adj[b].push_back({a, pair});
    };
    for (int i = 0; i < nt; ++i) {
        for (int k = 0; k < 3; ++k) {
            int j = fd.tris[i].nbr[k];
            if (j < 0 || j < i) continue;
            if (cls[i] == cls[j]) continue;
            std::array<int, 2> pair{fd.tris[i].v[(k + 1) % 3], fd.tris[i].v[(k + 2) % 3]};
            add_edge(cls[i], cls[j], pair);
        }
    }
    // One unbounded ray per hull edge, leafward along the inward edge normal.
    for (int i = 0; i < h; ++i) {
        Point e = t.sites_[(i + 1) % h] - t.sites_[i];
        FpvdRay ray;
        ray.origin = cls[fd.hull_owner[i].first];
        ray.direction = normalized(perp(e));
        ray.sites = {i, (i + 1) % h};
        t.rays_.push_back(ray);
    }

    // Region boundaries: fan of incident triangles between the two hull rays.
    t.regions_.assign(h, {});
    for (int i = 0; i < h; ++i) {
        int prev_edge = (i + h - 1) % h;
        std::vector<RegionRef>& reg = t.regions_[i];
        reg.push_back({true, prev_edge});
        int tcur = fd.hull_owner[prev_edge].first;
        int came_from = -1;
        long guard = 0;
        while (true) {
            if (++guard > nt + 4) throw GeometryError("fpvd: region walk did not terminate");
            if (reg.empty() || reg.back().is_ray || reg.back().index != cls[tcur]) {
                reg.push_back({false, cls[tcur]});
            }
            if (tcur == fd.hull_owner[i].first) break;
            // Pivot around vertex i: leave across the other edge incident to i.
            int next = -1;
            for (int k = 0; k < 3; ++k) {
                if (fd.tris[tcur].v[k] == i) continue;  // edge opposite i excluded below
                int a = fd.tris[tcur].v[(k + 1) % 3], b = fd.tris[tcur].v[(k + 2) % 3];
                if (a != i && b != i) continue;  // edge must touch i
                int nb = fd.tris[tcur].nbr[k];
                if (nb >= 0 && nb != came_from) next = nb;
            }
            if (next < 0) throw GeometryError("fpvd: broken region fan");
            came_from = tcur;
            tcur = next;
        }
        reg.push_back({true, i});
    }

    // Root at c_P: reuse a coincident node or split the containing feature.
    const double eps_root = 1e-9 * std::max({1.0, t.scale_, t.mec_.circle.radius});
    int root = -1;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.nodes_.size(); ++i) {
        double d = dist(t.nodes_[i].position, cp);
        if (d < best) {
            best = d;
            root = (int)i;
        }
    }
    if (best > eps_root) {
        // c_P is interior to an edge or ray; split it ("the edge it belongs to").
        int new_id = (int)t.nodes_.size();
        FpvdNode nn;
        nn.position = cp;

        double bd = std::numeric_limits<double>::infinity();
        int ea = -1, eb = -1, ray_idx = -1;
        std::array<int, 2> pair{-1, -1};
        for (int a = 0; a < (int)adj.size(); ++a) {
            for (auto& [b, pr] : adj[a]) {
                if (b < a) continue;
                double d = dist_point_segment(cp, {t.nodes_[a].position, t.nodes_[b].position});
                if (d < bd) {
                    bd = d;
                    ea = a;
                    eb = b;
                    ray_idx = -1;
                    pair = pr;
                }
            }
        }
        for (int r = 0; r < (int)t.rays_.size(); ++r) {
            Point o = t.nodes_[t.rays_[r].origin].position;
            double along = std::max(0.0, dot(cp - o, t.rays_[r].direction));
            double d = dist(cp, o + along * t.rays_[r].direction);
            if (d < bd) {
                bd = d;
                ray_idx = r;
                ea = t.rays_[r].origin;
                eb = -1;
                pair = t.rays_[r].sites;
            }
        }
        nn.defining_sites = {pair[0], pair[1]};
        std::sort(nn.defining_sites.begin(), nn.defining_sites.end());
        t.nodes_.push_back(nn);
        adj.push_back({});
        if (ray_idx < 0) {
            auto drop = [&](int x, int y) {
                auto& v = adj[x];
                v.erase(std::remove_if(v.begin(), v.end(),
                                       [&](auto& e) { return e.first == y; }),
                        v.end());
            };
            drop(ea, eb);
            drop(eb, ea);
            add_edge(ea, new_id, pair);
            add_edge(new_id, eb, pair);
            for (auto& reg : t.regions_) {
                for (size_t k = 0; k + 1 < reg.size(); ++k) {
                    bool fwd = !reg[k].is_ray && !reg[k + 1].is_ray &&
                               ((reg[k].index == ea && reg[k + 1].index == eb) ||
                                (reg[k].index == eb && reg[k + 1].index == ea));
                    if (fwd) {
                        reg.insert(reg.begin() + (long)k + 1, RegionRef{false, new_id});
                        break;
                    }
                }
            }
        } else {
            add_edge(ea, new_id, pair);
            t.rays_[ray_idx].origin = new_id;
            for (auto& reg : t.regions_) {
                for (size_t k = 0; k < reg.size(); ++k) {
                    if (!reg[k].is_ray || reg[k].index != ray_idx) continue;
                    // Insert the new node between the ray and its node side.
                    if (k > 0) {
                        reg.insert(reg.begin() + (long)k, RegionRef{false, new_id});
                    } else {
                        reg.insert(reg.begin() + 1, RegionRef{false, new_id});
                    }
                    break;
                }
            }
        }
        root = new_id;
    }

    // Orient the tree.
    t.root_ = root;
    std::vector<int> order{root};
    t.nodes_[root].parent = -1;
    t.nodes_[root].depth = 0;
    std::vector<char> seen(t.nodes_.size(), 0);
    seen[root] = 1;
    for (size_t head = 0; head < order.size(); ++head) {
        int cur = order[head];
        for (auto& [other, pr] : adj[cur]) {
            if (seen[other]) continue;
            seen[other] = 1;
            t.nodes_[other].parent = cur;
            t.nodes_[other].edge_sites = pr;
            t.nodes_[other].depth = t.nodes_[cur].depth + 1;
            t.nodes_[cur].children.push_back(other);
            order.push_back(other);
        }
    }
    if (order.size() != t.nodes_.size()) {
        throw GeometryError("fpvd: diagram skeleton is not connected");
    }
    return t;
}

double FpvdTree::rho_node(int node) const {
    const FpvdNode& n = nodes_[node];
    return dist(n.position, sites_[n.defining_sites[0]]);
}

double FpvdTree::rho(const DiagramLocation& loc) const {
    return dist(loc.position, sites_[loc.sites[0]]);
}

Circle FpvdTree::min_pcircle_at(Point y) const {
    double best = 0.0;
    for (const Point& s : sites_) best = std::max(best, dist(y, s));
    return {y, best};
}

DiagramLocation FpvdTree::node_location(int node) const {
    const FpvdNode& n = nodes_[node];
    DiagramLocation loc;
    loc.kind = DiagramLocation::Kind::NODE;
    loc.index = node;
    loc.position = n.position;
    loc.sites = {n.defining_sites[0], n.defining_sites[1]};
    return loc;
}

DiagramLocation FpvdTree::ray_exit_of_region(int site, const DirectedLine& ray) const {
    const auto& reg = regions_[site];
    const double eps = 1e-9 * std::max(1.0, scale_);

    struct Best {
        double t = std::numeric_limits<double>::infinity();
        DiagramLocation loc;
        bool valid = false;
    } best;

    auto consider_node = [&](int node, double t_hit) {
        if (t_hit < best.t) {
            best.t = t_hit;
            best.loc = node_location(node);
            best.valid = true;
        }
    };

    for (size_t k = 0; k + 1 < reg.size(); ++k) {
        const RegionRef& a = reg[k];
        const RegionRef& b = reg[k + 1];
        if (a.is_ray || b.is_ray) {
            const FpvdRay& fr = rays_[a.is_ray ? a.index : b.index];
            Point o = nodes_[fr.origin].position;
            RayHit hit = ray_ray_hit(ray, o, fr.direction, eps);
            if (!hit.valid || hit.t >= best.t) continue;
            if (dist(hit.position, o) <= eps * 8) {
                consider_node(fr.origin, hit.t);
            } else {
                best.t = hit.t;
                best.loc = DiagramLocation{DiagramLocation::Kind::RAY_POINT,
                                           a.is_ray ? a.index : b.index, hit.position, fr.sites};
                best.valid = true;
            }
        } else {
            Point pa = nodes_[a.index].position;
            Point pb = nodes_[b.index].position;
            if (dist(pa, pb) <= eps) continue;
            RayHit hit = ray_segment_hit(ray, pa, pb, eps);
            if (!hit.valid || hit.t >= best.t) continue;
            if (dist(hit.position, pa) <= eps * 8) {
                consider_node(a.index, hit.t);
            } else if (dist(hit.position, pb) <= eps * 8) {
                consider_node(b.index, hit.t);
            } else {
                // Edge reference = the child endpoint of the tree edge.
                int child = (nodes_[a.index].parent == b.index) ? a.index : b.index;
                best.t = hit.t;
                best.loc = DiagramLocation{DiagramLocation::Kind::EDGE_POINT, child,
                                           hit.position, nodes_[child].edge_sites};
                best.valid = true;
            }
        }
    }
    if (!best.valid) throw NoIntersection();
    return best.loc;
}

std::vector<std::string> FpvdTree::validate() const {
    std::vector<std::string> out;
    auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };

    if (root_ < 0 || root_ >= (int)nodes_.size()) {
        fail("root index out of range");
        return out;
    }
    // Single tree rooted at root_.
    std::vector<int> order{root_};
    std::vector<char> seen(nodes_.size(), 0);
    seen[root_] = 1;
    for (size_t head = 0; head < order.size(); ++head) {
        for (int c : nodes_[order[head]].children) {
            if (c < 0 || c >= (int)nodes_.size() || seen[c]) {
                fail("child links are not a tree");
                return out;
            }
            if (nodes_[c].parent != order[head]) fail("parent/child mismatch");
            if (nodes_[c].depth != nodes_[order[head]].depth + 1) fail("depth mismatch");
            seen[c] = 1;
            order.push_back(c);
        }
    }
    if (order.size() != nodes_.size()) fail("diagram skeleton is not connected");

    for (size_t i = 0; i < nodes_.size(); ++i) {
        const FpvdNode& n = nodes_[i];
        double rho = rho_node((int)i);
        double tol = 1e-9 * std::max({1.0, rho, scale_}) * 8;
        for (int s : n.defining_sites) {
            if (std::abs(dist(n.position, sites_[s]) - rho) > tol) {
                fail("node " + std::to_string(i) + " not equidistant from defining sites");
            }
        }
        for (size_t s = 0; s < sites_.size(); ++s) {
            if (dist(n.position, sites_[s]) > rho + tol) {
                fail("node " + std::to_string(i) + " has a farther site");
            }
        }
        if (n.parent >= 0) {
            if (rho_node(n.parent) > rho + tol) {
                fail("rho decreases from node " + std::to_string(i) + " to its parent");
            }
            // Finite edge lies on the bisector of its site pair.
            Point a = sites_[n.edge_sites[0]], b = sites_[n.edge_sites[1]];
            for (Point q : {n.position, nodes_[n.parent].position}) {
                if (std::abs(dist(q, a) - dist(q, b)) > tol) {
                    fail("edge of node " + std::to_string(i) + " is off its bisector");
                }
            }
        }
    }
    double tol_root = 1e-9 * std::max({1.0, scale_, mec_.circle.radius}) * 8;
    if (dist(nodes_[root_].position, mec_.circle.center) > tol_root) {
        fail("root is not at the minimum enclosing circle center");
    }
    if (nodes_[root_].parent != -1) fail("root has a parent");

    for (const FpvdRay& r : rays_) {
        if (r.origin < 0 || r.origin >= (int)nodes_.size()) fail("ray origin out of range");
        if (std::abs(norm(r.direction) - 1.0) > 1e-9) fail("ray direction not unit");
    }
    for (size_t s = 0; s < regions_.size(); ++s) {
        if (regions_[s].size() < 3 || !regions_[s].front().is_ray || !regions_[s].back().is_ray) {
            fail("region boundary of site " + std::to_string(s) + " malformed");
        }
    }
    return out;
}

}  // namespace circsep
