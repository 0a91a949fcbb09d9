#include "diramsey/ghrv.hpp"

#include <algorithm>
#include <stdexcept>

namespace diramsey {

namespace {

// Maximal acyclic subgraph maintenance with an incremental topological
// order (Pearce-Kelly): an inserted edge (u,v) with ord[u] > ord[v] either
// closes a cycle (v reaches u) or triggers a local reorder.
struct AcyclicBuilder {
    int n;
    std::vector<std::vector<int>> out, in;
    std::vector<int> ord, at; // ord[v] = position, at[pos] = vertex
    std::vector<char> mark;

    explicit AcyclicBuilder(int n_) : n(n_), out(n_), in(n_), ord(n_), at(n_), mark(n_, 0) {
        for (int i = 0; i < n; ++i) ord[i] = at[i] = i;
    }

    bool dfs_forward(int v, int ub, std::vector<int>& hit) {
        mark[v] = 1;
        hit.push_back(v);
        for (int w : out[v]) {
            if (mark[w] || ord[w] > ub) continue;
            if (ord[w] == ub) return true; // reached u: cycle
            if (dfs_forward(w, ub, hit)) return true;
        }
        return false;
    }

    void dfs_backward(int v, int lb, std::vector<int>& hit) {
        mark[v] = 2;
        hit.push_back(v);
        for (int w : in[v])
            if (!mark[w] && ord[w] > lb) dfs_backward(w, lb, hit);
    }

    // returns false when the edge would close a cycle (edge skipped)
    bool add_edge(int u, int v) {
        if (ord[u] > ord[v]) {
            int lb = ord[v], ub = ord[u];
            std::vector<int> fwd, bwd;
            bool cycle = dfs_forward(v, ub, fwd);
            for (int w : fwd) mark[w] = 0;
            if (cycle) return false;
            dfs_backward(u, lb, bwd);
            // move the backward closure before the forward closure inside
            // the affected window, preserving relative order
            std::vector<int> slots;
            for (int w : fwd) slots.push_back(ord[w]);
            for (int w : bwd) slots.push_back(ord[w]);
            std::sort(slots.begin(), slots.end());
            std::vector<int> movers;
            std::sort(bwd.begin(), bwd.end(), [&](int a, int b) { return ord[a] < ord[b]; });
            std::sort(fwd.begin(), fwd.end(), [&](int a, int b) { return ord[a] < ord[b]; });
            for (int w : bwd) movers.push_back(w);
            for (int w : fwd) movers.push_back(w);
            for (std::size_t i = 0; i < movers.size(); ++i) {
                ord[movers[i]] = slots[i];
                at[slots[i]] = movers[i];
            }
            for (int w : bwd) mark[w] = 0;
        }
        out[u].push_back(v);
        in[v].push_back(u);
        return true;
    }
};

} // namespace

GhrvOutcome ghrv_dichotomy(const ColourView& g, int target_length) {
    int hn = g.host_order();
    std::vector<int> verts = g.domain().to_vector();
    GhrvOutcome outcome;
    outcome.levels.assign(hn, -1);
    if (verts.empty()) {
        outcome.result = IndependentSet{};
        return outcome;
    }

    AcyclicBuilder builder(hn);
    for (int u : verts)
        g.out(u).for_each([&](int v) { builder.add_edge(u, v); });

    // longest D'-path (in edges) ending at each vertex, over topological order
    std::vector<int> topo(verts);
    std::sort(topo.begin(), topo.end(),
              [&](int a, int b) { return builder.ord[a] < builder.ord[b]; });
    std::vector<int> level(hn, 0), pred(hn, -1);
    for (int v : topo)
        for (int w : builder.out[v])
            if (level[v] + 1 > level[w]) {
                level[w] = level[v] + 1;
                pred[w] = v;
            }
    for (int v : verts) outcome.levels[v] = level[v];

    // the levelling must properly colour the view: D'-edges increase the
    // level, skipped edges close a cycle so their head levels strictly lower
    for (int u : verts)
        g.out(u).for_each([&](int v) {
            if (level[u] == level[v])
                throw std::logic_error("levelling failed to properly colour the graph");
        });

    int best = verts.front();
    for (int v : verts)
        if (level[v] > level[best]) best = v;

    if (level[best] >= target_length) {
        VertexPath p;
        for (int v = best; v != -1; v = pred[v]) p.vertices.push_back(v);
        std::reverse(p.vertices.begin(), p.vertices.end());
        outcome.result = std::move(p);
        return outcome;
    }

    std::vector<int> class_size(level[best] + 1, 0);
    for (int v : verts) ++class_size[level[v]];
    int best_class = 0;
    for (int c = 0; c <= level[best]; ++c)
        if (class_size[c] > class_size[best_class]) best_class = c;
    IndependentSet s;
    for (int v : verts)
        if (level[v] == best_class) s.vertices.push_back(v);
    outcome.result = std::move(s);
    return outcome;
}

} // namespace diramsey
