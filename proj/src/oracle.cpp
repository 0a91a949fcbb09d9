#include "diramsey/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diramsey {

std::optional<std::string> check_embedding(const ColouredDigraph& host, const OrientedTree& tree,
                                           const Embedding& e) {
    std::ostringstream os;
    if (static_cast<int>(e.map.size()) != tree.order()) return "map size differs from tree order";
    if (e.colour < 1 || e.colour > host.colours()) return "colour out of range";
    std::vector<char> used(host.order(), 0);
    for (int v : e.map) {
        if (v < 0 || v >= host.order()) return "image out of range";
        if (used[v]) {
            os << "map not injective at host vertex " << v;
            return os.str();
        }
        used[v] = 1;
    }
    for (auto [a, b] : tree.edges()) {
        if (host.colour_of(e.map[a], e.map[b]) != e.colour) {
            os << "edge " << a << "->" << b << " not realised in colour " << e.colour;
            return os.str();
        }
    }
    return std::nullopt;
}

bool is_independent_in_view(const ColourView& g, const std::vector<int>& vertices) {
    for (int u : vertices) {
        if (!g.domain().test(u)) return false;
        for (int v : vertices)
            if (u != v && (g.edge(u, v) || g.edge(v, u))) return false;
    }
    return true;
}

int tree_centroid(const OrientedTree& t) {
    int n = t.order();
    RootedView rv(t, 0);
    int best = 0, best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - rv.subtree_size[v]; // component through the parent
        for (int c : rv.children[v]) weight = std::max(weight, rv.subtree_size[c]);
        if (weight < best_weight) {
            best_weight = weight;
            best = v;
        }
    }
    return best;
}

namespace {

struct EmbedPlan {
    // tree vertices in placement order; entry 0 has no parent
    std::vector<int> order;
    std::vector<int> parent_pos;     // position in `order` of the parent, -1 for the first
    std::vector<char> edge_from_parent; // 1: parent->child in the tree
};

EmbedPlan make_plan(const OrientedTree& t) {
    EmbedPlan plan;
    int n = t.order();
    int start = tree_centroid(t);
    std::vector<char> vis(n, 0);
    std::vector<int> pos_of(n, -1);
    // iterative DFS
    std::vector<std::tuple<int, int, char>> stack{{start, -1, 0}};
    while (!stack.empty()) {
        auto [v, ppos, dir] = stack.back();
        stack.pop_back();
        if (vis[v]) continue;
        vis[v] = 1;
        pos_of[v] = static_cast<int>(plan.order.size());
        plan.order.push_back(v);
        plan.parent_pos.push_back(ppos);
        plan.edge_from_parent.push_back(dir);
        for (int w : t.out_neighbours(v))
            if (!vis[w]) stack.emplace_back(w, pos_of[v], 1);
        for (int w : t.in_neighbours(v))
            if (!vis[w]) stack.emplace_back(w, pos_of[v], 0);
    }
    return plan;
}

struct EmbedSearch {
    const ColourView& g;
    const OrientedTree& tree;
    const EmbedPlan plan;
    std::vector<int> degree_order;  // host vertices, decreasing view degree
    std::vector<Bitset> degree_ok;  // per plan position: hosts with enough out/in degree
    Bitset used;
    std::vector<int> image;         // per plan position

    EmbedSearch(const ColourView& gg, const OrientedTree& tt)
        : g(gg), tree(tt), plan(make_plan(tt)), used(gg.host_order()) {
        int hn = g.host_order();
        std::vector<int> outdeg(hn, 0), indeg(hn, 0);
        g.domain().for_each([&](int v) {
            outdeg[v] = g.out_degree(v);
            indeg[v] = g.in_degree(v);
        });
        degree_order = g.domain().to_vector();
        std::sort(degree_order.begin(), degree_order.end(), [&](int a, int b) {
            int da = outdeg[a] + indeg[a], db = outdeg[b] + indeg[b];
            return da != db ? da > db : a < b;
        });
        degree_ok.assign(plan.order.size(), Bitset(hn));
        for (std::size_t p = 0; p < plan.order.size(); ++p) {
            int tv = plan.order[p];
            g.domain().for_each([&](int v) {
                if (outdeg[v] >= tree.out_degree(tv) && indeg[v] >= tree.in_degree(tv))
                    degree_ok[p].set(v);
            });
        }
        image.assign(plan.order.size(), -1);
    }

    bool place(std::size_t p) {
        if (p == plan.order.size()) return true;
        Bitset cand = degree_ok[p];
        if (plan.parent_pos[p] >= 0) {
            int pimg = image[plan.parent_pos[p]];
            cand &= plan.edge_from_parent[p] ? g.out(pimg) : g.in(pimg);
        }
        cand -= used;
        if (cand.none()) return false;
        for (int v : degree_order) {
            if (!cand.test(v)) continue;
            image[p] = v;
            used.set(v);
            if (place(p + 1)) return true;
            used.reset(v);
            image[p] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_tree_in_view(const ColourView& g, const OrientedTree& tree) {
    if (tree.order() > g.size()) return std::nullopt;
    EmbedSearch s(g, tree);
    if (!s.place(0)) return std::nullopt;
    Embedding e;
    e.colour = g.colour();
    e.map.assign(tree.order(), -1);
    for (std::size_t p = 0; p < s.plan.order.size(); ++p) e.map[s.plan.order[p]] = s.image[p];
    return e;
}

std::optional<Embedding> contains_monochromatic_copy(const ColouredDigraph& host, int colour,
                                                     const OrientedTree& tree) {
    return find_tree_in_view(ColourView(host, colour), tree);
}

namespace {

// Kahn's algorithm restricted to the view; returns topological order or
// empty when the class has a cycle inside the domain.
std::vector<int> topological_order(const ColourView& g) {
    std::vector<int> verts = g.domain().to_vector();
    std::vector<int> indeg(g.host_order(), 0);
    for (int v : verts) indeg[v] = g.in_degree(v);
    std::vector<int> queue, order;
    for (int v : verts) if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        g.out(v).for_each([&](int w) {
            if (--indeg[w] == 0) queue.push_back(w);
        });
    }
    if (order.size() != verts.size()) return {};
    return order;
}

struct LongestPathSearch {
    const ColourView& g;
    Bitset unused;
    std::vector<int> current, best;

    explicit LongestPathSearch(const ColourView& gg) : g(gg), unused(gg.domain()) {}

    // forward closure of v within unused, used as an upper bound
    int reach_bound(int v) {
        Bitset seen(g.host_order());
        seen.set(v);
        Bitset frontier = seen;
        while (true) {
            Bitset next(g.host_order());
            frontier.for_each([&](int u) { next |= g.out(u); });
            next &= unused;
            next -= seen;
            if (next.none()) break;
            seen |= next;
            frontier = next;
        }
        return seen.count();
    }

    void extend(int tip) {
        if (current.size() > best.size()) best = current;
        if (best.size() == static_cast<std::size_t>(g.size())) return;
        if (static_cast<int>(current.size()) + reach_bound(tip) - 1 <=
            static_cast<int>(best.size()))
            return;
        Bitset nexts = g.out(tip) & unused;
        nexts.for_each([&](int w) {
            if (best.size() == static_cast<std::size_t>(g.size())) return;
            unused.reset(w);
            current.push_back(w);
            extend(w);
            current.pop_back();
            unused.set(w);
        });
    }
};

} // namespace

std::vector<int> longest_directed_path_in_view(const ColourView& g) {
    if (g.size() == 0) return {};
    auto topo = topological_order(g);
    if (!topo.empty()) {
        // DAG: dynamic programme over the topological order
        std::vector<int> len(g.host_order(), 0), pred(g.host_order(), -1);
        int best = topo.front();
        for (int v : topo) {
            g.out(v).for_each([&](int w) {
                if (len[v] + 1 > len[w]) {
                    len[w] = len[v] + 1;
                    pred[w] = v;
                }
            });
        }
        for (int v : topo)
            if (len[v] > len[best] || (len[v] == len[best] && v < best)) best = v;
        std::vector<int> path;
        for (int v = best; v != -1; v = pred[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }
    LongestPathSearch s(g);
    std::vector<int> starts = g.domain().to_vector();
    for (int v : starts) {
        if (s.best.size() == static_cast<std::size_t>(g.size())) break;
        s.unused.reset(v);
        s.current.assign(1, v);
        s.extend(v);
        s.unused.set(v);
    }
    return s.best;
}

std::vector<int> longest_monochromatic_directed_path(const ColouredDigraph& host, int colour) {
    return longest_directed_path_in_view(ColourView(host, colour));
}

bool is_acyclic_in_view(const ColourView& g) {
    return g.size() == 0 || !topological_order(g).empty();
}

} // namespace diramsey
