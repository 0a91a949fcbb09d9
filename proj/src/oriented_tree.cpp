#include "diramsey/oriented_tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diramsey {

OrientedTree::OrientedTree(int order, std::vector<std::pair<int, int>> edges,
                           std::optional<int> root)
    : order_(order), edges_(std::move(edges)), root_(root) {
    if (order_ < 1) throw std::invalid_argument("tree order must be positive");
    if (static_cast<int>(edges_.size()) != order_ - 1)
        throw std::invalid_argument("tree must have order-1 edges");
    if (root_ && (*root_ < 0 || *root_ >= order_))
        throw std::invalid_argument("root out of range");

    out_.assign(order_, {});
    in_.assign(order_, {});
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges_) {
        if (a < 0 || a >= order_ || b < 0 || b >= order_)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw std::invalid_argument("parallel or bidirected edge pair");
        out_[a].push_back(b);
        in_[b].push_back(a);
    }

    // connectivity of the underlying graph
    std::vector<char> vis(order_, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : out_[v]) if (!vis[w]) { vis[w] = 1; ++reached; q.push_back(w); }
        for (int w : in_[v]) if (!vis[w]) { vis[w] = 1; ++reached; q.push_back(w); }
    }
    if (reached != order_) throw std::invalid_argument("underlying graph is not connected");
}

bool OrientedTree::has_edge(int tail, int head) const {
    for (int w : out_[tail]) if (w == head) return true;
    return false;
}

bool OrientedTree::is_path() const {
    for (int v = 0; v < order_; ++v)
        if (degree(v) > 2) return false;
    return true;
}

bool OrientedTree::is_out_directed() const {
    int roots = 0;
    for (int v = 0; v < order_; ++v) {
        if (in_degree(v) == 0) ++roots;
        else if (in_degree(v) > 1) return false;
    }
    return roots == 1;
}

bool OrientedTree::is_in_directed() const {
    int sinks = 0;
    for (int v = 0; v < order_; ++v) {
        if (out_degree(v) == 0) ++sinks;
        else if (out_degree(v) > 1) return false;
    }
    return sinks == 1;
}

int OrientedTree::out_root() const {
    for (int v = 0; v < order_; ++v)
        if (in_degree(v) == 0 && is_out_directed()) return v;
    throw std::logic_error("tree is not out-directed");
}

OrientedTree OrientedTree::with_root(int r) const { return OrientedTree(order_, edges_, r); }

OrientedTree OrientedTree::reversed() const {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(edges_.size());
    for (auto [a, b] : edges_) rev.emplace_back(b, a);
    return OrientedTree(order_, std::move(rev), root_);
}

std::string OrientedTree::to_string() const {
    std::ostringstream os;
    os << "tree(" << order_;
    if (root_) os << ", root=" << *root_;
    os << ")";
    for (auto [a, b] : edges_) os << " " << a << "->" << b;
    return os.str();
}

RootedView::RootedView(const OrientedTree& t, int r) : root(r) {
    int n = t.order();
    if (r < 0 || r >= n) throw std::invalid_argument("root out of range");
    parent.assign(n, -1);
    children.assign(n, {});
    depth.assign(n, 0);
    subtree_size.assign(n, 1);
    bfs_order.clear();
    bfs_order.reserve(n);

    std::vector<char> vis(n, 0);
    std::deque<int> q{r};
    vis[r] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        bfs_order.push_back(v);
        auto visit = [&](int w) {
            if (vis[w]) return;
            vis[w] = 1;
            parent[w] = v;
            depth[w] = depth[v] + 1;
            children[v].push_back(w);
            q.push_back(w);
        };
        for (int w : t.out_neighbours(v)) visit(w);
        for (int w : t.in_neighbours(v)) visit(w);
    }
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it)
        if (parent[*it] >= 0) subtree_size[parent[*it]] += subtree_size[*it];
}

OrientedTree directed_path(int order) {
    if (order < 1) throw std::invalid_argument("path order must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < order; ++i) e.emplace_back(i, i + 1);
    return OrientedTree(order, std::move(e), order > 0 ? std::optional<int>(0) : std::nullopt);
}

OrientedTree oriented_path_from_blocks(const std::vector<int>& block_lengths, bool first_forward) {
    if (block_lengths.empty()) return OrientedTree(1, {}, 0);
    int len = 0;
    for (int b : block_lengths) {
        if (b < 1) throw std::invalid_argument("block length must be >= 1");
        len += b;
    }
    std::vector<std::pair<int, int>> e;
    bool fwd = first_forward;
    int pos = 0;
    for (int b : block_lengths) {
        for (int i = 0; i < b; ++i, ++pos)
            e.emplace_back(fwd ? pos : pos + 1, fwd ? pos + 1 : pos);
        fwd = !fwd;
    }
    return OrientedTree(len + 1, std::move(e), 0);
}

OrientedTree out_star(int order) {
    if (order < 1) throw std::invalid_argument("star order must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < order; ++i) e.emplace_back(0, i);
    return OrientedTree(order, std::move(e), 0);
}

OrientedTree in_star(int order) {
    if (order < 1) throw std::invalid_argument("star order must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < order; ++i) e.emplace_back(i, 0);
    return OrientedTree(order, std::move(e), 0);
}

Subtree induced_subtree(const OrientedTree& t, const std::vector<int>& keep,
                        std::optional<int> new_root) {
    std::vector<int> ids(keep);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> local(t.order(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : t.edges())
        if (local[a] >= 0 && local[b] >= 0) e.emplace_back(local[a], local[b]);

    std::optional<int> root;
    if (new_root) {
        if (local[*new_root] < 0) throw std::invalid_argument("new root not among kept vertices");
        root = local[*new_root];
    } else if (t.root() && local[*t.root()] >= 0) {
        root = local[*t.root()];
    }
    return Subtree{OrientedTree(static_cast<int>(ids.size()), std::move(e), root), std::move(ids)};
}

} // namespace diramsey
