#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diramsey {

// An acyclic orientation of an undirected tree, optionally rooted.
// Vertex ids are dense 0-based. Immutable after construction; the
// constructor enforces tree-ness (connected, order-1 edges, no loops,
// no bidirected pairs) and throws std::invalid_argument otherwise.
class OrientedTree {
public:
    OrientedTree(int order, std::vector<std::pair<int, int>> edges,
                 std::optional<int> root = std::nullopt);

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::optional<int> root() const { return root_; }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }
    const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbours(int v) const { return in_[v]; }

    // tail == u ? head : tail for the unique edge between u and w; direction query
    bool has_edge(int tail, int head) const;

    bool is_path() const;
    // all edges point away from a single source (which is then the natural root)
    bool is_out_directed() const;
    bool is_in_directed() const;
    // source of an out-directed tree (in-degree 0 vertex); requires is_out_directed()
    int out_root() const;

    OrientedTree with_root(int r) const;
    OrientedTree reversed() const; // every edge flipped, root kept

    std::string to_string() const;

private:
    int order_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<int> root_;
    std::vector<std::vector<int>> out_, in_;
};

// Underlying tree structure relative to a root: parents, children (with
// original edge orientations intact), depths, and subtree sizes.
struct RootedView {
    int root;
    std::vector<int> parent;          // -1 at root
    std::vector<std::vector<int>> children;
    std::vector<int> depth;
    std::vector<int> subtree_size;    // descendant count including the vertex itself
    std::vector<int> bfs_order;

    RootedView(const OrientedTree& t, int root);
};

// Builders for common targets.
OrientedTree directed_path(int order);
// Oriented path from maximal directed block lengths (each >= 1); blocks
// alternate direction starting with first_forward.
OrientedTree oriented_path_from_blocks(const std::vector<int>& block_lengths, bool first_forward);
OrientedTree out_star(int order); // centre 0 with order-1 out-children
OrientedTree in_star(int order);

// Extracted subtree, relabelled to dense ids; original_ids maps new -> old.
struct Subtree {
    OrientedTree tree;
    std::vector<int> original_ids;
};

// Subtree induced by `keep` (must be connected in the underlying tree).
Subtree induced_subtree(const OrientedTree& t, const std::vector<int>& keep,
                        std::optional<int> new_root = std::nullopt);

} // namespace diramsey
