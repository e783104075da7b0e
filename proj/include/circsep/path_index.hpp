#pragma once

#include <vector>

#include "circsep/fpvd.hpp"

// Ancestor navigation over the rooted diagram tree: lowest common ancestors
// and the depth-midpoint oracle that keeps any root-path binary search at
// O(log n) iterations.

namespace circsep {

struct NotAncestor : GeometryError {
    NotAncestor() : GeometryError("find_point_between: second node is not a strict ancestor") {}
};
struct AlreadyAdjacent : GeometryError {
    AlreadyAdjacent() : GeometryError("find_point_between: nodes are adjacent") {}
};

class PathLocator {
  public:
    // up_[k][v] is the 2^k-th ancestor of v; the root is its own ancestor.
    static PathLocator build(const FpvdTree& tree);

    int depth(int v) const { return depth_[v]; }
    int parent(int v) const { return up_[0][v]; }

    // Ancestor of v at the given (shallower or equal) depth.
    int ancestor_at_depth(int v, int target_depth) const;

    // Midpoint of the root path between u and its strict ancestor v with
    // depth(u) - depth(v) >= 2: the ancestor of u at depth
    // floor((depth(u) + depth(v)) / 2). Throws NotAncestor / AlreadyAdjacent.
    int find_point_between(int u, int v) const;

    bool is_ancestor(int anc, int v) const;

    int lca(int u, int v) const;

    int levels() const { return (int)up_.size(); }

  private:
    std::vector<std::vector<int>> up_;
    std::vector<int> depth_;
};

}  // namespace circsep
