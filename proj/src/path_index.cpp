#include "circsep/path_index.hpp"

namespace circsep {

PathLocator PathLocator::build(const FpvdTree& tree) {
    const auto& nodes = tree.nodes();
    int n = (int)nodes.size();
    PathLocator loc;
    loc.depth_.resize(n);
    int max_depth = 0;
    for (int v = 0; v < n; ++v) {
        loc.depth_[v] = nodes[v].depth;
        max_depth = std::max(max_depth, nodes[v].depth);
    }
    int levels = 1;
    while ((1 << levels) <= max_depth) ++levels;
    loc.up_.assign(levels, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
        loc.up_[0][v] = nodes[v].parent < 0 ? v : nodes[v].parent;
    }
    for (int k = 1; k < levels; ++k) {
        for (int v = 0; v < n; ++v) loc.up_[k][v] = loc.up_[k - 1][loc.up_[k - 1][v]];
    }
    return loc;
}

int PathLocator::ancestor_at_depth(int v, int target_depth) const {
    int delta = depth_[v] - target_depth;
    for (int k = 0; delta > 0; ++k, delta >>= 1) {
        if (delta & 1) v = up_[k][v];
    }
    return v;
}

int PathLocator::find_point_between(int u, int v) const {
    if (depth_[v] >= depth_[u] || ancestor_at_depth(u, depth_[v]) != v) throw NotAncestor();
    if (depth_[u] - depth_[v] < 2) throw AlreadyAdjacent();
    return ancestor_at_depth(u, (depth_[u] + depth_[v]) / 2);
}

bool PathLocator::is_ancestor(int anc, int v) const {
    return depth_[anc] <= depth_[v] && ancestor_at_depth(v, depth_[anc]) == anc;
}

int PathLocator::lca(int u, int v) const {
    if (depth_[u] > depth_[v]) u = ancestor_at_depth(u, depth_[v]);
    if (depth_[v] > depth_[u]) v = ancestor_at_depth(v, depth_[u]);
    if (u == v) return u;
    for (int k = (int)up_.size() - 1; k >= 0; --k) {
        if (up_[k][u] != up_[k][v]) {
            u = up_[k][u];
            v = up_[k][v];
        }
    }
    return up_[0][u];
}

}  // namespace circsep
