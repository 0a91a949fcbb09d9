#include "diramsey/embedders.hpp"

#include "diramsey/oracle.hpp"
#include "diramsey/tree_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diramsey {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

void emit(const TraceFn& trace, const std::string& line) {
    if (trace) trace(line);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

} // namespace

std::int64_t tree_pair_constant(int k) {
    // (8k)^k overflows 64 bits from k = 10 on
    if (k < 1 || k > 9) throw std::invalid_argument("colour count out of supported range");
    std::int64_t a = 1;
    for (int i = 0; i < k; ++i) a *= 8 * k;
    return a;
}

std::uint64_t path_induction_constant(int k) {
    if (k < 1) throw std::invalid_argument("colour count must be positive");
    std::uint64_t pow8 = 1, fact = 1;
    for (int i = 0; i < k; ++i) pow8 = saturating_mul(pow8, 8);
    for (int i = 2; i <= k; ++i) fact = saturating_mul(fact, static_cast<std::uint64_t>(i));
    return saturating_mul(pow8 - 2, fact);
}

std::uint64_t path_ramsey_constant(int k) {
    if (k < 1) throw std::invalid_argument("colour count must be positive");
    std::uint64_t pow8 = 1, fact = 1;
    for (int i = 0; i < k; ++i) pow8 = saturating_mul(pow8, 8);
    for (int i = 2; i <= k; ++i) fact = saturating_mul(fact, static_cast<std::uint64_t>(i));
    return saturating_mul(pow8, fact);
}

std::int64_t indep_set_constant(std::int64_t leaves) {
    if (leaves < 1) throw std::invalid_argument("leaf count must be positive");
    // c_1 = 1, c_l = c_{l-1} + 2l  =>  l^2 + l - 1
    return leaves * leaves + leaves - 1;
}

long double log_tree_guarantee(int k, int l, const std::vector<int>& leaf_counts) {
    if (l < 0 || l > k) throw std::invalid_argument("tracked count must be in 0..k");
    if (static_cast<int>(leaf_counts.size()) != l)
        throw std::invalid_argument("need one leaf count per tracked tree");
    long double a = static_cast<long double>(tree_pair_constant(k));
    long double expo = static_cast<long double>(k - l) * (2 * a + 1);
    for (int x : leaf_counts) expo += x;
    return expo * std::log(2 * a);
}

// --- TriPartition --------------------------------------------------------

std::optional<std::string> check_tri_partition(const ColourView& g, const OrientedTree& t,
                                               const TriPartition& p) {
    Bitset all = p.U | p.X | p.Y;
    if (!(all == g.domain())) return "U, X, Y do not cover the domain";
    if (p.U.intersects(p.X) || p.U.intersects(p.Y) || p.X.intersects(p.Y))
        return "U, X, Y are not disjoint";
    if (p.X.count() != p.Y.count()) return "|X| != |Y|";
    int bad = -1;
    p.X.for_each([&](int x) {
        if (bad < 0 && g.out(x).and_count(p.Y) >= t.order()) bad = x;
    });
    if (bad >= 0) {
        std::ostringstream os;
        os << "vertex " << bad << " in X has at least |T| out-neighbours in Y";
        return os.str();
    }
    if (static_cast<int>(p.partial_map.size()) != t.order())
        return "partial map has wrong length";
    // the mapped vertices must form a subtree containing the root, realised in U
    int root = t.root() ? *t.root() : t.out_root();
    std::vector<int> mapped;
    for (int v = 0; v < t.order(); ++v)
        if (p.partial_map[v] >= 0) mapped.push_back(v);
    Bitset images(g.host_order());
    for (int v : mapped) {
        int h = p.partial_map[v];
        if (!p.U.test(h)) return "partial embedding leaves U";
        if (images.test(h)) return "partial embedding not injective";
        images.set(h);
    }
    if (!(images == p.U)) return "U is not exactly the image of the partial embedding";
    if (!mapped.empty()) {
        if (p.partial_map[root] < 0) return "embedded subtree misses the root";
        RootedView rv(t, root);
        for (int v : mapped)
            if (v != root && p.partial_map[rv.parent[v]] < 0)
                return "embedded vertex set is not a subtree";
        for (auto [a, b] : t.edges())
            if (p.partial_map[a] >= 0 && p.partial_map[b] >= 0 &&
                !g.edge(p.partial_map[a], p.partial_map[b]))
                return "embedded subtree edge missing in the graph";
    }
    return std::nullopt;
}

// --- embed_path_or_independent --------------------------------------------

std::variant<Embedding, IndependentSet> embed_path_or_independent(const ColourView& g,
                                                                  const MindegreePair& pair,
                                                                  const OrientedTree& path) {
    if (!path.is_path()) throw std::invalid_argument("target is not a path");
    const int n = path.order() - 1; // length
    if (pair.threshold <= n)
        throw std::invalid_argument("mindegree threshold must exceed the path length");

    Embedding emb;
    emb.colour = g.colour();
    emb.map.assign(path.order(), -1);

    if (path.order() == 1) {
        int u0 = pair.X.first();
        if (u0 < 0) throw std::invalid_argument("empty mindegree pair");
        emb.map[0] = u0;
        return emb;
    }

    BlockDecomposition d = block_decomposition(path);
    const int l = d.longest_block_length;
    const std::int64_t guarantee = ceil_div(pair.threshold - n, l);

    Bitset used(g.host_order());
    std::vector<int> image(path.order(), -1); // by traversal position
    bool forward = d.first_edge_forward;
    // the walk starts in X for a forward first block, in Y for a backward one
    bool at_X = forward;
    int u = (at_X ? pair.X : pair.Y).first();
    if (u < 0) throw std::invalid_argument("empty mindegree pair");
    image[0] = u;
    used.set(u);
    int pos = 0;

    for (std::size_t bi = 0; bi < d.block_orders.size(); ++bi) {
        const int need = d.block_orders[bi] - 1; // new vertices in this block
        Bitset S = forward ? (g.out(u) & pair.Y) : (g.in(u) & pair.X);
        S -= used;
        GhrvOutcome out = ghrv_dichotomy(g.restricted(S), need - 1);
        if (auto* indep = std::get_if<IndependentSet>(&out.result)) {
            if (static_cast<std::int64_t>(indep->vertices.size()) < guarantee)
                throw std::logic_error("independent set below the guaranteed size");
            return std::move(*indep);
        }
        auto& block_path = std::get<VertexPath>(out.result).vertices;
        block_path.resize(need);
        if (forward) {
            // u -> q_1 -> ... -> q_need, traversal follows the edges
            for (int i = 0; i < need; ++i) image[pos + 1 + i] = block_path[i];
            u = block_path[need - 1];
        } else {
            // q_1 -> ... -> q_need -> u, traversal walks against them
            for (int i = 0; i < need; ++i) image[pos + 1 + i] = block_path[need - 1 - i];
            u = block_path[0];
        }
        for (int i = 0; i < need; ++i) used.set(image[pos + 1 + i]);
        pos += need;
        forward = !forward;
        at_X = !at_X;
    }

    for (int i = 0; i < path.order(); ++i) emb.map[d.traversal[i]] = image[i];
    return emb;
}

// --- dfs_partition ---------------------------------------------------------

std::variant<Embedding, TriPartition> dfs_partition(const ColourView& g, const OrientedTree& t,
                                                    const TraceFn& trace) {
    if (!t.is_out_directed()) throw std::invalid_argument("dfs_partition needs an out-directed tree");
    const int root = t.out_root();
    RootedView rv(t, root);
    const int hn = g.host_order();

    Bitset X(hn), Y = g.domain();
    std::vector<int> partial(t.order(), -1);
    std::vector<int> embedded_children(t.order(), 0);
    std::vector<int> embedded_order; // tree vertices in embedding order
    int sizeX = 0, sizeY = Y.count();

    auto reset_subtree = [&]() {
        for (int v : embedded_order) partial[v] = -1;
        std::fill(embedded_children.begin(), embedded_children.end(), 0);
        embedded_order.clear();
    };

    long long steps = 0;
    const long long step_cap =
        4LL * (static_cast<long long>(hn) + 1) * (hn + 1) + 16;

    while (true) {
        if (++steps > step_cap) throw std::logic_error("dfs process exceeded its step bound");
        if (sizeX == sizeY) break;

        if (embedded_order.empty()) {
            // step 1: root an empty subtree at an arbitrary vertex of Y
            int u = Y.first();
            Y.reset(u);
            --sizeY;
            partial[root] = u;
            embedded_order.push_back(root);
            emit(trace, "step=dfs case=1 sizes=" + std::to_string(sizeX) + "," +
                            std::to_string(sizeY));
            continue;
        }

        // step 2: an out-leaf of T' that is not a leaf of T
        int v = -1;
        for (int w : embedded_order)
            if (embedded_children[w] == 0 && !rv.children[w].empty()) {
                v = w;
                break;
            }
        if (v < 0) {
            // every embedded vertex is complete: T is embedded
            Embedding e;
            e.colour = g.colour();
            e.map = partial;
            return e;
        }
        const int d = static_cast<int>(rv.children[v].size());
        Bitset avail = g.out(partial[v]) & Y;
        if (avail.count() >= d) {
            // step 2a: removing j vertices from Y keeps |Y| >= |X| iff
            // j <= sizeY - sizeX, so cap and stop when the cap binds
            int allowed = std::min(d, sizeY - sizeX);
            bool stop = allowed < d;
            int taken = 0;
            int hv = avail.first();
            while (taken < allowed) {
                int child = rv.children[v][taken];
                partial[child] = hv;
                embedded_order.push_back(child);
                Y.reset(hv);
                --sizeY;
                ++taken;
                ++embedded_children[v];
                hv = avail.next(hv + 1);
            }
            emit(trace, "step=dfs case=2a sizes=" + std::to_string(sizeX) + "," +
                            std::to_string(sizeY));
            if (stop) break;
        } else {
            // step 2b: v joins X, the rest of the subtree returns to Y
            int hv = partial[v];
            X.set(hv);
            ++sizeX;
            for (int w : embedded_order)
                if (partial[w] != hv) {
                    Y.set(partial[w]);
                    ++sizeY;
                }
            reset_subtree();
            emit(trace, "step=dfs case=2b sizes=" + std::to_string(sizeX) + "," +
                            std::to_string(sizeY));
        }
    }

    TriPartition p;
    p.X = std::move(X);
    p.Y = std::move(Y);
    p.U = Bitset(hn);
    for (int v = 0; v < t.order(); ++v)
        if (partial[v] >= 0) p.U.set(partial[v]);
    p.partial_map = std::move(partial);
    if (auto bad = check_tri_partition(g, t, p))
        throw std::logic_error("tri-partition self-check failed: " + *bad);
    return p;
}

// --- bidirected embedding ---------------------------------------------------

namespace {

Embedding bidirected_embed_in_domain(const ColouredDigraph& host, int colour, Rational eps,
                                     const OrientedTree& tree, const Bitset& domain) {
    const std::int64_t n = domain.count();
    if (n < 2) throw std::invalid_argument("domain too small");
    ColourView view(host, colour, domain);
    const std::int64_t edges = static_cast<std::int64_t>(view.edge_count());
    // at least (1 + eps) * n(n-1)/2 edges of the colour
    if (2 * edges * eps.den < (eps.den + eps.num) * n * (n - 1))
        throw std::invalid_argument("not enough edges of the colour: need (1+eps) * C(n,2)");
    const std::int64_t cap = ceil_div(eps.num * n, 2 * eps.den); // ceil(eps*n/2)
    if (tree.order() > cap)
        throw std::invalid_argument("tree larger than ceil(eps*n/2)");

    auto bid_row = [&](int v) {
        return host.out_row(colour, v) & host.in_row(colour, v);
    };

    // peel vertices with bidirected degree < eps*n/2 (exact rational compare)
    Bitset S = domain;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = S.first(); v >= 0; v = S.next(v + 1)) {
            std::int64_t deg = bid_row(v).and_count(S);
            if (2 * deg * eps.den < eps.num * n) {
                S.reset(v);
                changed = true;
            }
        }
    }
    if (S.none()) throw std::logic_error("peeling emptied the host despite the edge count");

    // greedy embedding over bidirected pairs, orientation-free
    RootedView rv(tree, 0);
    Embedding e;
    e.colour = colour;
    e.map.assign(tree.order(), -1);
    Bitset used(host.order());
    e.map[0] = S.first();
    used.set(e.map[0]);
    for (int v : rv.bfs_order) {
        if (v == 0) continue;
        Bitset cand = bid_row(e.map[rv.parent[v]]) & S;
        cand -= used;
        int h = cand.first();
        if (h < 0) throw std::logic_error("greedy embedding ran out of neighbours");
        e.map[v] = h;
        used.set(h);
    }
    if (auto bad = check_embedding(host, tree, e))
        throw std::logic_error("bidirected embedding failed its check: " + *bad);
    return e;
}

} // namespace

Embedding bidirected_greedy_embed(const ColouredDigraph& host, int colour, Rational eps,
                                  const OrientedTree& tree) {
    if (colour < 1 || colour > host.colours()) throw std::invalid_argument("colour out of range");
    if (eps.num <= 0 || eps.den <= 0) throw std::invalid_argument("epsilon must be positive");
    return bidirected_embed_in_domain(host, colour, eps, tree, Bitset(host.order(), true));
}

Embedding low_outdegree_embed(const ColouredDigraph& host, int max_red_outdegree, int l,
                              const OrientedTree& tree) {
    if (host.colours() != 2) throw std::invalid_argument("host must be 2-coloured (red=1, blue=2)");
    if (max_red_outdegree < 0 || l < 1) throw std::invalid_argument("bad parameters");
    if (tree.order() > l) throw std::invalid_argument("tree larger than l");

    const int k = max_red_outdegree;
    const int want = 2 * k + 2 * l;
    Bitset S(host.order());
    int got = 0;
    for (int v = 0; v < host.order() && got < want; ++v)
        if (host.out_row(1, v).count() <= k) {
            S.set(v);
            ++got;
        }
    if (got < want)
        throw std::invalid_argument("fewer than 2k+2l vertices of red out-degree at most k");

    // inside S the blue edge count is at least (2 - 2k/(|S|-1)) * C(|S|,2)
    Rational eps{want - 1 - 2 * k, want - 1};
    return bidirected_embed_in_domain(host, 2, eps, tree, S);
}

// --- tree_or_independent ----------------------------------------------------

namespace {

// chain above the first branching vertex of a symmetric tree, the vertex
// itself, and its children
struct BranchPoint {
    std::vector<int> chain; // root .. u (depth order, includes u)
    int u;
    std::vector<int> children;
};

BranchPoint find_branch(const OrientedTree& s) {
    int root = s.out_root();
    BranchPoint b;
    int v = root;
    while (s.out_degree(v) == 1) {
        b.chain.push_back(v);
        v = s.out_neighbours(v)[0];
    }
    b.chain.push_back(v);
    b.u = v;
    b.children = s.out_neighbours(v);
    std::sort(b.children.begin(), b.children.end());
    return b;
}

// level-wise isomorphism between the subtree of `a` below sub_a (w.r.t.
// root_a) and the subtree of `b` below sub_b (w.r.t. root_b); both
// symmetric with the same level degrees, so slots match exactly
std::vector<int> symmetric_subtree_iso(const OrientedTree& a, int root_a, int sub_a,
                                       const OrientedTree& b, int root_b, int sub_b) {
    RootedView ra(a, root_a), rb(b, root_b);
    std::vector<int> map(a.order(), -1);
    map[sub_a] = sub_b;
    std::vector<int> next_child(b.order(), 0);
    std::vector<int> queue{sub_a};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int c : ra.children[v]) {
            map[c] = rb.children[map[v]][next_child[map[v]]++];
            queue.push_back(c);
        }
    }
    return map;
}

std::vector<int> descendants_of(const OrientedTree& t, int root, int v) {
    RootedView rv(t, root);
    std::vector<int> out, stack{v};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        out.push_back(w);
        for (int c : rv.children[w]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// recursion over symmetric trees
std::variant<Embedding, IndependentSet> symmetric_tree_or_independent(const ColourView& g,
                                                                      const OrientedTree& s,
                                                                      int m) {
    const int leaves = out_leaves(s);
    if (leaves == 1) {
        // s is a directed path: GHRV base case
        GhrvOutcome out = ghrv_dichotomy(g, s.order() - 1);
        if (auto* indep = std::get_if<IndependentSet>(&out.result)) {
            if (static_cast<int>(indep->vertices.size()) < m)
                throw std::logic_error("independent set below m in the GHRV base case");
            return std::move(*indep);
        }
        auto& path = std::get<VertexPath>(out.result).vertices;
        Embedding e;
        e.colour = g.colour();
        e.map.assign(s.order(), -1);
        int v = s.out_root();
        for (int i = 0; i < s.order(); ++i) {
            e.map[v] = path[i];
            if (i + 1 < s.order()) v = s.out_neighbours(v)[0];
        }
        return e;
    }

    BranchPoint bp = find_branch(s);
    const int d = static_cast<int>(bp.children.size());
    // prune all but the first child subtree
    std::vector<char> drop(s.order(), 0);
    for (std::size_t ci = 1; ci < bp.children.size(); ++ci)
        for (int w : descendants_of(s, s.out_root(), bp.children[ci])) drop[w] = 1;
    std::vector<int> keep;
    for (int v = 0; v < s.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    Subtree pruned = induced_subtree(s, keep, s.out_root());
    const int pruned_leaves = out_leaves(pruned.tree);
    const std::int64_t copy_threshold =
        indep_set_constant(pruned_leaves) * pruned.tree.order() * static_cast<std::int64_t>(m);

    std::vector<int> local_of(s.order(), -1);
    for (std::size_t i = 0; i < pruned.original_ids.size(); ++i)
        local_of[pruned.original_ids[i]] = static_cast<int>(i);

    // maximal disjoint family of copies of the pruned tree
    std::vector<std::vector<int>> copies; // local pruned id -> host vertex
    Bitset rest = g.domain();
    while (rest.count() >= copy_threshold) {
        auto sub = symmetric_tree_or_independent(g.restricted(rest), pruned.tree, m);
        if (auto* indep = std::get_if<IndependentSet>(&sub)) return std::move(*indep);
        auto& emb = std::get<Embedding>(sub);
        for (int h : emb.map) rest.reset(h);
        copies.push_back(std::move(emb.map));
    }

    const int v1_local = local_of[bp.children[0]];
    const int u_local = local_of[bp.u];
    std::vector<int> U;
    Bitset U_bits(g.host_order());
    for (auto& c : copies) {
        U.push_back(c[v1_local]);
        U_bits.set(c[v1_local]);
    }
    if (static_cast<std::int64_t>(U.size()) < 2LL * leaves * m)
        throw std::logic_error("copy family smaller than the counting argument allows");

    std::sort(U.begin(), U.end());
    std::vector<int> copy_of(g.host_order(), -1);
    for (std::size_t i = 0; i < copies.size(); ++i) copy_of[copies[i][v1_local]] = static_cast<int>(i);

    int w0 = -1;
    for (int u : U)
        if (g.out(u).and_count(U_bits) >= leaves) {
            w0 = u;
            break;
        }

    if (w0 >= 0) {
        std::vector<int> mates;
        (g.out(w0) & U_bits).for_each([&](int w) {
            if (static_cast<int>(mates.size()) < d) mates.push_back(w);
        });
        const auto& base_copy = copies[copy_of[w0]];

        Embedding e;
        e.colour = g.colour();
        e.map.assign(s.order(), -1);
        // chain x_0..x_{t-1} rides the base copy shifted one step down, u sits
        // on w0 (the base copy's image of v_1)
        const int t = static_cast<int>(bp.chain.size()) - 1; // depth of u
        for (int j = 0; j + 1 < t; ++j)
            e.map[bp.chain[j]] = base_copy[local_of[bp.chain[j + 1]]];
        if (t >= 1) e.map[bp.chain[t - 1]] = base_copy[u_local];
        e.map[bp.u] = w0;
        // each child subtree comes from the copy owning its mate
        const int s_root = s.out_root();
        const int pruned_root = pruned.tree.out_root();
        for (int ci = 0; ci < d; ++ci) {
            const auto& donor = copies[copy_of[mates[ci]]];
            auto iso = symmetric_subtree_iso(s, s_root, bp.children[ci], pruned.tree,
                                             pruned_root, v1_local);
            for (int v : descendants_of(s, s_root, bp.children[ci]))
                e.map[v] = donor[iso[v]];
        }
        return e;
    }

    // no vertex of out-degree >= leaves in U: the underlying graph of G[U]
    // is (2*leaves-2)-degenerate; greedy colouring on the degeneracy order
    // yields an independent class of size at least |U| / (2*leaves-1)
    std::vector<int> order;
    Bitset left = U_bits;
    while (left.any()) {
        int best = -1, best_deg = 0;
        left.for_each([&](int v) {
            int deg = g.out(v).and_count(left) + g.in(v).and_count(left);
            if (best < 0 || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        });
        order.push_back(best);
        left.reset(best);
    }
    std::vector<int> colour_of(g.host_order(), -1);
    int max_colour = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<char> taken(2 * leaves + 1, 0);
        Bitset nb = (g.out(v) | g.in(v)) & U_bits;
        nb.for_each([&](int w) {
            if (colour_of[w] >= 0 && colour_of[w] <= 2 * leaves) taken[colour_of[w]] = 1;
        });
        int c = 0;
        while (taken[c]) ++c;
        colour_of[v] = c;
        max_colour = std::max(max_colour, c);
    }
    if (max_colour > 2 * leaves - 2)
        throw std::logic_error("degeneracy colouring exceeded 2l-1 colours");
    std::vector<std::vector<int>> classes(max_colour + 1);
    for (int v : U) classes[colour_of[v]].push_back(v);
    std::size_t best_class = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() > classes[best_class].size()) best_class = c;
    if (static_cast<int>(classes[best_class].size()) < m)
        throw std::logic_error("largest colour class below m");
    return IndependentSet{classes[best_class]};
}

} // namespace

std::int64_t tree_or_independent_threshold(const OrientedTree& tree, int m) {
    if (!tree.is_out_directed())
        throw std::invalid_argument("tree_or_independent needs an out-directed tree");
    if (m < 1) throw std::invalid_argument("independent set size must be positive");
    SymmetricClosure c = symmetric_closure(tree);
    __int128 need = static_cast<__int128>(indep_set_constant(out_leaves(c.tree))) *
                    c.tree.order() * m;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    return need > cap ? cap : static_cast<std::int64_t>(need);
}

std::variant<Embedding, IndependentSet> tree_or_independent(const ColourView& g,
                                                            const OrientedTree& tree, int m) {
    const std::int64_t need = tree_or_independent_threshold(tree, m);
    if (g.size() < need)
        throw std::invalid_argument("graph smaller than the guarantee threshold c_l * |T'| * m");
    SymmetricClosure closure = symmetric_closure(tree);
    auto out = symmetric_tree_or_independent(g, closure.tree, m);
    if (auto* indep = std::get_if<IndependentSet>(&out)) return std::move(*indep);
    auto& closure_emb = std::get<Embedding>(out);
    Embedding e;
    e.colour = g.colour();
    e.map.assign(tree.order(), -1);
    for (int v = 0; v < tree.order(); ++v) e.map[v] = closure_emb.map[closure.input_map[v]];
    if (auto bad = check_embedding(g.host(), tree, e))
        throw std::logic_error("closure embedding failed to restrict: " + *bad);
    return e;
}

// --- layered_embed -----------------------------------------------------------

LayeredEmbedResult layered_embed(const ColouredDigraph& host, int colour,
                                 const MindegreePair& pair, const OrientedTree& tree, int root,
                                 const SubEmbedder& sub_in, const TraceFn& trace) {
    if (colour < 1 || colour > host.colours()) throw std::invalid_argument("colour out of range");
    if (root < 0 || root >= tree.order()) throw std::invalid_argument("root out of range");
    SubEmbedder sub = sub_in ? sub_in : SubEmbedder(find_tree_in_view);

    LayeredEmbedResult result;
    result.guaranteed = pair.threshold >= 4 * tree.order() - 3;

    LayerDecomposition layers = alternating_layers(tree, root);
    std::vector<char> in_layer(tree.order(), 0);
    Embedding full;
    full.colour = colour;
    full.map.assign(tree.order(), -1);
    Bitset used(host.order());

    for (std::size_t i = 0; i < layers.layers.size(); ++i) {
        const bool odd = (i % 2) == 1;
        std::vector<char> member(tree.order(), 0);
        for (int v : layers.layers[i]) member[v] = 1;

        // component roots: layer 0 has the root; later layers attach to the
        // previous layer through a single edge per component
        std::vector<std::pair<int, int>> roots; // (component root, parent in previous layer)
        if (i == 0) {
            roots.emplace_back(root, -1);
        } else {
            for (int v : layers.layers[i]) {
                const auto& attach = odd ? tree.out_neighbours(v) : tree.in_neighbours(v);
                for (int p : attach)
                    if (in_layer[p]) {
                        roots.emplace_back(v, p);
                        break;
                    }
            }
        }

        for (auto [s, p] : roots) {
            // gather this component inside the layer
            std::vector<int> comp{s};
            std::vector<int> stack{s};
            std::vector<char> seen(tree.order(), 0);
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : tree.out_neighbours(v))
                    if (member[w] && !seen[w]) { seen[w] = 1; comp.push_back(w); stack.push_back(w); }
                for (int w : tree.in_neighbours(v))
                    if (member[w] && !seen[w]) { seen[w] = 1; comp.push_back(w); stack.push_back(w); }
            }
            Subtree st = induced_subtree(tree, comp, s);

            Bitset target(host.order());
            if (i == 0) {
                target = pair.Y;
            } else if (odd) {
                target = host.in_row(colour, full.map[p]) & pair.X;
            } else {
                target = host.out_row(colour, full.map[p]) & pair.Y;
            }
            target -= used;
            emit(trace, "step=layer case=" + std::to_string(i) +
                            " sizes=" + std::to_string(st.tree.order()) + "," +
                            std::to_string(target.count()));
            auto emb = sub(ColourView(host, colour, target), st.tree);
            if (!emb) return result; // flagged miss, never a fabricated certificate
            for (std::size_t j = 0; j < st.original_ids.size(); ++j) {
                full.map[st.original_ids[j]] = emb->map[j];
                used.set(emb->map[j]);
            }
        }
        std::fill(in_layer.begin(), in_layer.end(), 0);
        for (int v : layers.layers[i]) in_layer[v] = 1;
    }

    if (auto bad = check_embedding(host, tree, full))
        throw std::logic_error("layered embedding failed its check: " + *bad);
    result.embedding = std::move(full);
    return result;
}

// --- ramsey_path_embed_tournament -------------------------------------------

namespace {

int majority_colour(const ColouredDigraph& host, const Bitset& domain,
                    const std::vector<int>& colours) {
    int best = colours.front();
    std::int64_t best_count = -1;
    for (int c : colours) {
        std::int64_t count = 0;
        domain.for_each([&](int v) { count += host.out_row(c, v).and_count(domain); });
        if (count > best_count) {
            best_count = count;
            best = c;
        }
    }
    return best;
}

std::optional<Embedding> path_pipeline(const ColouredDigraph& host, const OrientedTree& path,
                                       Bitset domain, std::vector<int> colours, int n_len,
                                       const TraceFn& trace) {
    if (domain.count() < path.order()) return std::nullopt;
    if (colours.size() == 1) {
        emit(trace, "step=path-base case=k1 sizes=" + std::to_string(domain.count()));
        return find_tree_in_view(ColourView(host, colours[0], domain), path);
    }
    const int k = static_cast<int>(colours.size());
    const int dn = domain.count();
    if (dn < 2) return std::nullopt;
    const int threshold = static_cast<int>(ceil_div(dn, 8LL * k));
    if (threshold <= n_len) return std::nullopt; // below the usable range

    int c = majority_colour(host, domain, colours);
    ColourView view(host, c, domain);
    MindegreePair pair = find_mindegree_pair(view, Rational{1, k});
    emit(trace, "step=path-split case=colour" + std::to_string(c) +
                    " sizes=" + std::to_string(pair.X.count()) + "," +
                    std::to_string(pair.Y.count()) + " threshold=" +
                    std::to_string(pair.threshold));

    auto out = embed_path_or_independent(view, pair, path);
    if (auto* emb = std::get_if<Embedding>(&out)) return std::move(*emb);
    auto& indep = std::get<IndependentSet>(out);
    emit(trace, "step=path-recurse case=independent sizes=" + std::to_string(indep.vertices.size()));
    Bitset sub(host.order());
    for (int v : indep.vertices) sub.set(v);
    std::vector<int> rest;
    for (int cc : colours)
        if (cc != c) rest.push_back(cc);
    return path_pipeline(host, path, std::move(sub), std::move(rest), n_len, trace);
}

} // namespace

RamseyEmbedResult ramsey_path_embed_tournament(const ColouredDigraph& host,
                                               const OrientedTree& path, const TraceFn& trace) {
    if (host.kind() != HostKind::Tournament)
        throw std::invalid_argument("host must be a tournament");
    if (!path.is_path()) throw std::invalid_argument("target is not a path");

    RamseyEmbedResult result;
    const int k = host.colours();
    const int n_len = path.order() - 1;

    if (n_len == 0) {
        result.guaranteed = host.order() >= 1;
        Embedding e;
        e.colour = 1;
        e.map = {0};
        result.embedding = std::move(e);
        return result;
    }

    const int l = block_decomposition(path).longest_block_length;
    std::uint64_t need = path_induction_constant(k);
    need = saturating_mul(need, static_cast<std::uint64_t>(n_len));
    for (int i = 0; i < k - 1; ++i) need = saturating_mul(need, static_cast<std::uint64_t>(l));
    result.guaranteed = static_cast<std::uint64_t>(host.order()) >= need;

    std::vector<int> colours(k);
    for (int c = 1; c <= k; ++c) colours[c - 1] = c;
    auto emb = path_pipeline(host, path, Bitset(host.order(), true), colours, n_len, trace);
    if (emb) {
        if (auto bad = check_embedding(host, path, *emb))
            throw std::logic_error("path pipeline produced an invalid certificate: " + *bad);
        result.embedding = std::move(emb);
        return result;
    }

    // best effort below the guarantee: the exhaustive oracle settles it
    emit(trace, "step=path-fallback case=oracle sizes=" + std::to_string(host.order()));
    result.via_fallback = true;
    for (int c = 1; c <= k; ++c)
        if (auto found = contains_monochromatic_copy(host, c, path)) {
            result.embedding = std::move(found);
            return result;
        }
    return result;
}

// --- ramsey_tree_embed_tournament ---------------------------------------------

namespace {

struct Slot {
    OrientedTree tree;
    int colour;
    bool tracked;
};

class TreeEmbedWorker {
public:
    TreeEmbedWorker(const ColouredDigraph& host, const TraceFn& trace)
        : host_(host), trace_(trace) {}

    std::optional<Embedding> run(const Bitset& domain, const std::vector<Slot>& slots,
                                 int depth) {
        if (depth > 128) return std::nullopt;
        if (domain.none()) return std::nullopt;

        // a single-vertex target embeds immediately
        for (const Slot& s : slots)
            if (s.tree.order() == 1) {
                Embedding e;
                e.colour = s.colour;
                e.map = {domain.first()};
                return e;
            }

        if (slots.size() == 1)
            return find_tree_in_view(ColourView(host_, slots[0].colour, domain), slots[0].tree);

        const int k = static_cast<int>(slots.size());

        // iterate majority colours and nested mindegree pairs until a tracked
        // colour appears or a colour repeats
        std::vector<int> colour_at;          // c_i per iteration
        std::vector<MindegreePair> pairs;    // (X_i, Y_i)
        Bitset X_prev = domain;
        std::vector<int> slot_colours;
        for (const Slot& s : slots) slot_colours.push_back(s.colour);

        int case1_slot = -1, case2_first = -1, case2_second = -1;
        for (int iter = 0; iter <= k + 1; ++iter) {
            if (X_prev.count() < 2) return std::nullopt;
            int c = majority_colour(host_, X_prev, slot_colours);
            MindegreePair pair = find_mindegree_pair(ColourView(host_, c, X_prev), Rational{1, k});
            emit(trace_, "step=tree-split case=iter" + std::to_string(iter) + " colour=" +
                             std::to_string(c) + " sizes=" + std::to_string(pair.X.count()) +
                             "," + std::to_string(pair.Y.count()));
            colour_at.push_back(c);
            pairs.push_back(pair);
            int slot_idx = -1;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (slots[i].colour == c) slot_idx = static_cast<int>(i);
            if (slots[slot_idx].tracked) {
                case1_slot = slot_idx;
                break;
            }
            bool repeat = false;
            for (std::size_t j = 0; j + 1 < colour_at.size(); ++j)
                if (colour_at[j] == c) {
                    case2_first = static_cast<int>(j);
                    case2_second = static_cast<int>(colour_at.size()) - 1;
                    repeat = true;
                    break;
                }
            if (repeat) break;
            X_prev = pairs.back().X;
        }

        if (case1_slot >= 0) return case_leaf_strip(slots, case1_slot, pairs.back(), depth);
        if (case2_first >= 0)
            return case_core_and_hang(slots, colour_at[case2_second], pairs[case2_first],
                                      pairs[case2_second], depth);
        return std::nullopt; // the process stalled below any usable density
    }

private:
    std::optional<Embedding> recurse_replacing(const std::vector<Slot>& slots, int idx,
                                               OrientedTree replacement, bool tracked,
                                               const Bitset& domain, int depth) {
        std::vector<Slot> next = slots;
        next[idx].tree = std::move(replacement);
        next[idx].tracked = tracked;
        return run(domain, next, depth + 1);
    }

    // Case 1: the stopping colour is tracked. Strip a leaf path from its
    // tree when it has more than two leaves; otherwise it is a path and the
    // block walk or an independent-set recursion settles it.
    std::optional<Embedding> case_leaf_strip(const std::vector<Slot>& slots, int s,
                                             const MindegreePair& pair, int depth) {
        const OrientedTree& tau = slots[s].tree;
        const int c = slots[s].colour;
        int leaf_count = 0;
        for (int v = 0; v < tau.order(); ++v)
            if (tau.degree(v) <= 1) ++leaf_count;

        if (leaf_count <= 2) {
            const int n_len = tau.order() - 1;
            if (pair.threshold <= n_len) return std::nullopt;
            emit(trace_, "step=tree-case1 case=path sizes=" + std::to_string(tau.order()));
            // the view spans both sides of the pair
            Bitset span = pair.X | pair.Y;
            auto out = embed_path_or_independent(ColourView(host_, c, span), pair, tau);
            if (auto* emb = std::get_if<Embedding>(&out)) return std::move(*emb);
            auto& indep = std::get<IndependentSet>(out);
            Bitset sub(host_.order());
            for (int v : indep.vertices) sub.set(v);
            std::vector<Slot> rest;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (static_cast<int>(i) != s) rest.push_back(slots[i]);
            emit(trace_, "step=tree-case1 case=independent sizes=" +
                             std::to_string(indep.vertices.size()));
            return run(sub, rest, depth + 1);
        }

        emit(trace_, "step=tree-case1 case=leafstrip sizes=" + std::to_string(tau.order()));
        // lowest-index leaf and its path to the first branching vertex
        int v = -1;
        for (int w = 0; w < tau.order(); ++w)
            if (tau.degree(w) <= 1) {
                v = w;
                break;
            }
        std::vector<int> path_vertices{v};
        int prev = -1, cur = v;
        while (tau.degree(cur) < 3) {
            int next = -1;
            for (int w : tau.out_neighbours(cur)) if (w != prev) next = w;
            for (int w : tau.in_neighbours(cur)) if (w != prev) next = w;
            prev = cur;
            cur = next;
            path_vertices.push_back(cur);
        }
        const int u = cur;
        const int w_next = prev; // neighbour of u on the path towards v
        const bool away = tau.has_edge(u, w_next);

        std::vector<int> tau_keep;
        {
            std::vector<char> on_path(tau.order(), 0);
            for (int x : path_vertices) on_path[x] = 1;
            on_path[u] = 0;
            for (int x = 0; x < tau.order(); ++x)
                if (!on_path[x]) tau_keep.push_back(x);
        }
        Subtree reduced = induced_subtree(tau, tau_keep);
        std::vector<int> reduced_local(tau.order(), -1);
        for (std::size_t i = 0; i < reduced.original_ids.size(); ++i)
            reduced_local[reduced.original_ids[i]] = static_cast<int>(i);

        // embed the reduced tree on the side whose neighbourhoods we need next
        const Bitset& side = away ? pair.X : pair.Y;
        auto first = recurse_replacing(slots, s, reduced.tree, true, side, depth);
        if (!first) return std::nullopt;
        if (first->colour != c) return first; // another target appeared: done

        Bitset used(host_.order());
        for (int h : first->map) used.set(h);
        const int u_img = first->map[reduced_local[u]];
        Bitset hood = away ? (host_.out_row(c, u_img) & pair.Y)
                           : (host_.in_row(c, u_img) & pair.X);
        hood -= used;

        std::vector<int> tail(path_vertices.begin(), path_vertices.end() - 1); // without u
        Subtree tail_tree = induced_subtree(tau, tail);
        std::vector<int> tail_local(tau.order(), -1);
        for (std::size_t i = 0; i < tail_tree.original_ids.size(); ++i)
            tail_local[tail_tree.original_ids[i]] = static_cast<int>(i);

        auto second = recurse_replacing(slots, s, tail_tree.tree, true, hood, depth);
        if (!second) return std::nullopt;
        if (second->colour != c) return second;

        Embedding full;
        full.colour = c;
        full.map.assign(tau.order(), -1);
        for (int x : tau_keep) full.map[x] = first->map[reduced_local[x]];
        for (int x : tail) full.map[x] = second->map[tail_local[x]];
        if (auto bad = check_embedding(host_, tau, full))
            throw std::logic_error("leaf-strip assembly failed: " + *bad);
        return full;
    }

    // Case 2: a repeated untracked colour. Embed the 2a-core of its tree in
    // Y, then hang the missing subtrees into Z (out-children) and X
    // (in-children) neighbourhoods.
    std::optional<Embedding> case_core_and_hang(const std::vector<Slot>& slots, int c,
                                                const MindegreePair& first,
                                                const MindegreePair& second, int depth) {
        int s = -1;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (slots[i].colour == c) s = static_cast<int>(i);
        const OrientedTree& tau = slots[s].tree;
        const Bitset& X = second.X;
        const Bitset& Y = second.Y;
        const Bitset& Z = first.Y;

        const int k = static_cast<int>(slots.size());
        const std::int64_t two_a = 2 * tree_pair_constant(k);
        OrientedTree rooted = tau.with_root(0);
        auto core = k_core(rooted, two_a);
        if (!core) return std::nullopt; // cannot happen for two_a >= 2
        emit(trace_, "step=tree-case2 case=core sizes=" + std::to_string(core->tree.order()) +
                         "," + std::to_string(tau.order()));

        std::vector<int> core_local(tau.order(), -1);
        for (std::size_t i = 0; i < core->original_ids.size(); ++i)
            core_local[core->original_ids[i]] = static_cast<int>(i);

        auto core_emb = recurse_replacing(slots, s, core->tree, true, Y, depth);
        if (!core_emb) return std::nullopt;
        if (core_emb->colour != c) return core_emb;

        Embedding full;
        full.colour = c;
        full.map.assign(tau.order(), -1);
        Bitset used(host_.order());
        for (int x : core->original_ids) {
            full.map[x] = core_emb->map[core_local[x]];
            used.set(full.map[x]);
        }

        RootedView rv(rooted, 0);
        for (int x : core->original_ids) {
            for (int y : rv.children[x]) {
                if (core_local[y] >= 0) continue;
                auto sub_vertices = descendants_of(rooted, 0, y);
                Subtree hang = induced_subtree(tau, sub_vertices, y);
                std::vector<int> hang_local(tau.order(), -1);
                for (std::size_t i = 0; i < hang.original_ids.size(); ++i)
                    hang_local[hang.original_ids[i]] = static_cast<int>(i);

                const bool away = tau.has_edge(x, y);
                Bitset hood = away ? (host_.out_row(c, full.map[x]) & Z)
                                   : (host_.in_row(c, full.map[x]) & X);
                hood -= used;
                emit(trace_, "step=tree-case2 case=hang sizes=" +
                                 std::to_string(hang.tree.order()) + "," +
                                 std::to_string(hood.count()));
                auto sub = recurse_replacing(slots, s, hang.tree, slots[s].tracked, hood, depth);
                if (!sub) return std::nullopt;
                if (sub->colour != c) return sub;
                for (std::size_t i = 0; i < hang.original_ids.size(); ++i) {
                    full.map[hang.original_ids[i]] = sub->map[i];
                    used.set(sub->map[i]);
                }
            }
        }
        if (auto bad = check_embedding(host_, tau, full))
            throw std::logic_error("core-and-hang assembly failed: " + *bad);
        return full;
    }

    const ColouredDigraph& host_;
    const TraceFn& trace_;
};

} // namespace

RamseyEmbedResult ramsey_tree_embed_tournament(const ColouredDigraph& host,
                                               const std::vector<OrientedTree>& trees,
                                               int l_tracked, const TraceFn& trace) {
    if (host.kind() != HostKind::Tournament)
        throw std::invalid_argument("host must be a tournament");
    if (static_cast<int>(trees.size()) != host.colours())
        throw std::invalid_argument("need exactly one target tree per colour");
    if (host.colours() > 9)
        throw std::invalid_argument("at most 9 colours supported by the pair constants");
    if (l_tracked < 0 || l_tracked > static_cast<int>(trees.size()))
        throw std::invalid_argument("tracked count out of range");

    RamseyEmbedResult result;
    const int k = host.colours();
    {
        std::vector<int> leaf_counts;
        for (int i = 0; i < l_tracked; ++i) {
            int leaves = 0;
            for (int v = 0; v < trees[i].order(); ++v)
                if (trees[i].degree(v) <= 1) ++leaves;
            leaf_counts.push_back(leaves);
        }
        long double log_need = log_tree_guarantee(k, l_tracked, leaf_counts);
        for (const auto& t : trees) log_need += std::log(static_cast<long double>(t.order()));
        result.guaranteed = std::log(static_cast<long double>(host.order())) >= log_need;
    }

    std::vector<Slot> slots;
    for (int i = 0; i < k; ++i) slots.push_back({trees[i], i + 1, i < l_tracked});

    TreeEmbedWorker worker(host, trace);
    auto emb = worker.run(Bitset(host.order(), true), slots, 0);
    if (emb) {
        if (auto bad = check_embedding(host, trees[emb->colour - 1], *emb))
            throw std::logic_error("tree pipeline produced an invalid certificate: " + *bad);
        result.embedding = std::move(emb);
        return result;
    }

    emit(trace, "step=tree-fallback case=oracle sizes=" + std::to_string(host.order()));
    result.via_fallback = true;
    for (int c = 1; c <= k; ++c)
        if (auto found = contains_monochromatic_copy(host, c, trees[c - 1])) {
            result.embedding = std::move(found);
            return result;
        }
    return result;
}

} // namespace diramsey
