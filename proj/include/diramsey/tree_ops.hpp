#pragma once

#include "diramsey/oriented_tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace diramsey {

// Maximal directed blocks of an oriented path, in traversal order.
struct BlockDecomposition {
    std::vector<int> block_orders; // each >= 2
    bool first_edge_forward;
    int longest_block_length;      // l(P): max over blocks of order-1
    // traversal order of the input's vertex ids realising the blocks
    std::vector<int> traversal;
};

// Vertices with more than |T|/k descendants (counts include the vertex
// itself; strict comparison against the rational threshold). k = 1 makes
// the core empty, hence the optional. The returned subtree keeps the root.
std::optional<Subtree> k_core(const OrientedTree& tree, std::int64_t k);

BlockDecomposition block_decomposition(const OrientedTree& path);

// Leaves with out-degree 0.
int out_leaves(const OrientedTree& tree);

// For an out-directed tree with a out-leaves and selected vertices of
// out-degrees d_1..d_k: checks d_1+...+d_k - k + 1 <= a. Always true; kept
// as a cross-check on the degree/leaf accounting.
bool check_degree_leaf_bound(const OrientedTree& tree, const std::vector<int>& vertices);

// Smallest symmetric supertree: depth-i out-degree = max out-degree among
// input vertices at depth i. input_map embeds the input into the result.
struct SymmetricClosure {
    OrientedTree tree;          // rooted at 0, out-directed, symmetric
    std::vector<int> input_map; // input vertex -> closure vertex
};
SymmetricClosure symmetric_closure(const OrientedTree& tree);

bool is_symmetric_out_tree(const OrientedTree& tree);

// Alternating reachability layers from a root: U_0 = out-reachable from r;
// odd layers grow by in-edges from the previous layer, even layers by
// out-edges. Layers partition the vertices; the last layer is non-empty
// (a single vertex yields just U_0 = {r}).
struct LayerDecomposition {
    int root;
    std::vector<std::vector<int>> layers;
};
LayerDecomposition alternating_layers(const OrientedTree& tree, int root);

} // namespace diramsey
