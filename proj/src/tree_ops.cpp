#include "diramsey/tree_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace diramsey {

std::optional<Subtree> k_core(const OrientedTree& tree, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("core parameter must be at least 1");
    if (!tree.root()) throw std::invalid_argument("k_core requires a rooted tree");
    RootedView rv(tree, *tree.root());
    std::vector<int> keep;
    for (int v = 0; v < tree.order(); ++v)
        if (static_cast<std::int64_t>(rv.subtree_size[v]) * k > tree.order()) keep.push_back(v);
    if (keep.empty()) return std::nullopt;
    // descendant counts are monotone towards the root, so `keep` is connected
    return induced_subtree(tree, keep, *tree.root());
}

BlockDecomposition block_decomposition(const OrientedTree& path) {
    if (!path.is_path()) throw std::invalid_argument("input is not a path");
    int n = path.order();

    auto traverse = [&](int start) {
        std::vector<int> order{start};
        int prev = -1, cur = start;
        while (static_cast<int>(order.size()) < n) {
            int next = -1;
            for (int w : path.out_neighbours(cur)) if (w != prev) next = w;
            for (int w : path.in_neighbours(cur)) if (w != prev) next = w;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        return order;
    };

    auto decompose = [&](const std::vector<int>& order) {
        BlockDecomposition d;
        d.traversal = order;
        d.first_edge_forward = true;
        if (n == 1) {
            d.block_orders = {};
            d.longest_block_length = 0;
            return d;
        }
        d.first_edge_forward = path.has_edge(order[0], order[1]);
        bool dir = d.first_edge_forward;
        int block = 2;
        for (int i = 1; i + 1 < n; ++i) {
            bool step = path.has_edge(order[i], order[i + 1]);
            if (step == dir) {
                ++block;
            } else {
                d.block_orders.push_back(block);
                block = 2;
                dir = step;
            }
        }
        d.block_orders.push_back(block);
        d.longest_block_length = 0;
        for (int b : d.block_orders) d.longest_block_length = std::max(d.longest_block_length, b - 1);
        return d;
    };

    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
        if (path.degree(v) <= 1) ends.push_back(v);
    if (n == 1) return decompose({ends[0]});

    BlockDecomposition a = decompose(traverse(ends[0]));
    BlockDecomposition b = decompose(traverse(ends[1]));
    // Prefer forward-starting traversals; break ties by the larger block
    // sequence so P_{4,3} reads as [4,3] rather than its mirror.
    auto better = [](const BlockDecomposition& x, const BlockDecomposition& y) {
        if (x.first_edge_forward != y.first_edge_forward) return x.first_edge_forward;
        return x.block_orders >= y.block_orders;
    };
    return better(a, b) ? a : b;
}

int out_leaves(const OrientedTree& tree) {
    int count = 0;
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) <= 1 && tree.out_degree(v) == 0) ++count;
    return count;
}

bool check_degree_leaf_bound(const OrientedTree& tree, const std::vector<int>& vertices) {
    if (!tree.is_out_directed())
        throw std::invalid_argument("degree/leaf bound applies to out-directed trees");
    std::vector<char> seen(tree.order(), 0);
    long long sum = 0;
    for (int v : vertices) {
        if (v < 0 || v >= tree.order()) throw std::invalid_argument("selected vertex out of range");
        if (seen[v]) throw std::invalid_argument("selected vertices must be distinct");
        seen[v] = 1;
        sum += tree.out_degree(v);
    }
    long long a = out_leaves(tree);
    return sum - static_cast<long long>(vertices.size()) + 1 <= a;
}

SymmetricClosure symmetric_closure(const OrientedTree& tree) {
    if (!tree.is_out_directed())
        throw std::invalid_argument("symmetric closure applies to out-directed trees");
    int root = tree.out_root();
    if (tree.root() && *tree.root() != root)
        throw std::invalid_argument("rooted tree must be rooted at its source");
    RootedView rv(tree, root);

    int max_depth = 0;
    for (int v = 0; v < tree.order(); ++v) max_depth = std::max(max_depth, rv.depth[v]);
    std::vector<int> level_degree(max_depth + 1, 0);
    for (int v = 0; v < tree.order(); ++v)
        level_degree[rv.depth[v]] = std::max(level_degree[rv.depth[v]], tree.out_degree(v));

    // build level by level: every depth-i vertex gets level_degree[i] children
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> level_vertices(max_depth + 2);
    level_vertices[0] = {0};
    int next_id = 1;
    for (int d = 0; d <= max_depth; ++d) {
        for (int v : level_vertices[d]) {
            for (int c = 0; c < level_degree[d]; ++c) {
                edges.emplace_back(v, next_id);
                level_vertices[d + 1].push_back(next_id);
                ++next_id;
            }
        }
        if (level_degree[d] == 0) break;
    }
    OrientedTree closure(next_id, std::move(edges), 0);

    // canonical embedding of the input: children claim fresh slots in order
    RootedView cv(closure, 0);
    std::vector<int> input_map(tree.order(), -1);
    std::vector<int> slots_used(closure.order(), 0);
    input_map[root] = 0;
    for (int v : rv.bfs_order) {
        if (v == root) continue;
        int p = input_map[rv.parent[v]];
        input_map[v] = cv.children[p][slots_used[p]++];
    }
    return SymmetricClosure{std::move(closure), std::move(input_map)};
}

bool is_symmetric_out_tree(const OrientedTree& tree) {
    if (!tree.is_out_directed()) return false;
    RootedView rv(tree, tree.out_root());
    std::vector<int> level_degree;
    for (int v = 0; v < tree.order(); ++v) {
        int d = rv.depth[v];
        if (d >= static_cast<int>(level_degree.size())) level_degree.resize(d + 1, -1);
        if (level_degree[d] == -1) level_degree[d] = tree.out_degree(v);
        else if (level_degree[d] != tree.out_degree(v)) return false;
    }
    return true;
}

LayerDecomposition alternating_layers(const OrientedTree& tree, int root) {
    if (root < 0 || root >= tree.order()) throw std::invalid_argument("root out of range");
    int n = tree.order();
    std::vector<char> assigned(n, 0);
    LayerDecomposition d;
    d.root = root;

    // layer 0: close {root} under out-edges; layer i: seed from the previous
    // layer (in-edges when i is odd, out-edges when even), then close in the
    // same direction so each layer is a forest of one-way subtrees.
    auto close = [&](std::vector<int> frontier, bool follow_out) {
        std::vector<int> layer;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier) {
                layer.push_back(v);
                const auto& step = follow_out ? tree.out_neighbours(v) : tree.in_neighbours(v);
                for (int w : step)
                    if (!assigned[w]) {
                        assigned[w] = 1;
                        next.push_back(w);
                    }
            }
            frontier = std::move(next);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    };

    assigned[root] = 1;
    d.layers.push_back(close({root}, true));
    int remaining = n - static_cast<int>(d.layers[0].size());
    int i = 1;
    while (remaining > 0) {
        bool odd = (i % 2) == 1;
        std::vector<int> seeds;
        for (int u : d.layers[i - 1]) {
            const auto& attach = odd ? tree.in_neighbours(u) : tree.out_neighbours(u);
            for (int w : attach)
                if (!assigned[w]) {
                    assigned[w] = 1;
                    seeds.push_back(w);
                }
        }
        auto layer = close(std::move(seeds), !odd);
        remaining -= static_cast<int>(layer.size());
        d.layers.push_back(std::move(layer));
        ++i;
    }
    return d;
}

} // namespace diramsey
