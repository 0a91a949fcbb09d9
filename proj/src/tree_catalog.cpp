#include "diramsey/tree_catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace diramsey {

namespace {

// code of the subtree at v (edge into v from its parent already encoded by
// the caller): sorted child codes, each prefixed by the edge direction
std::string subtree_code(const OrientedTree& t, const RootedView& rv, int v, bool directed) {
    std::vector<std::string> parts;
    for (int c : rv.children[v]) {
        char dir = !directed ? '-' : (t.has_edge(v, c) ? '>' : '<');
        parts.push_back(dir + subtree_code(t, rv, c, directed));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return out;
}

std::string rooted_code(const OrientedTree& t, int root, bool directed = true) {
    RootedView rv(t, root);
    return subtree_code(t, rv, root, directed);
}

std::vector<int> tree_centroids(const OrientedTree& t);

std::string undirected_canonical_code(const OrientedTree& t) {
    std::string best;
    for (int c : tree_centroids(t)) {
        std::string code = rooted_code(t, c, false);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<int> tree_centroids(const OrientedTree& t) {
    int n = t.order();
    RootedView rv(t, 0);
    std::vector<int> weight(n, 0);
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int w = n - rv.subtree_size[v];
        for (int c : rv.children[v]) w = std::max(w, rv.subtree_size[c]);
        weight[v] = w;
        best = std::min(best, w);
    }
    std::vector<int> cs;
    for (int v = 0; v < n; ++v)
        if (weight[v] == best) cs.push_back(v);
    return cs;
}

} // namespace

std::string canonical_tree_code(const OrientedTree& t) {
    std::string best;
    for (int c : tree_centroids(t)) {
        std::string code = rooted_code(t, c, true);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<OrientedTree> enumerate_rooted_trees(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<OrientedTree> out;
    auto emit = [&](const std::vector<int>& level) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> last_at_level(n + 1, -1);
        last_at_level[level[0]] = 0;
        for (int i = 1; i < n; ++i) {
            edges.emplace_back(last_at_level[level[i] - 1], i);
            last_at_level[level[i]] = i;
        }
        out.emplace_back(n, std::move(edges), 0);
    };

    // Beyer-Hedetniemi successor walk over canonical level sequences,
    // starting from the path and ending at the star.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i;
    while (true) {
        emit(level);
        int p = -1;
        for (int i = n - 1; i >= 1; --i)
            if (level[i] > 1) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
    return out;
}

std::vector<OrientedTree> enumerate_oriented_trees(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n == 1) return {OrientedTree(1, {})};
    if (n > 8) throw std::invalid_argument("oriented tree enumeration supported up to order 8");

    // undirected labelled trees from Pruefer sequences
    std::vector<std::vector<std::pair<int, int>>> skeletons;
    std::vector<int> seq(std::max(0, n - 2), 0);
    auto decode = [&]() {
        std::vector<int> deg(n, 1);
        for (int v : seq) ++deg[v];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> done(n, 0);
        std::vector<int> work = seq;
        for (int v : work) {
            for (int leaf = 0; leaf < n; ++leaf)
                if (deg[leaf] == 1 && !done[leaf]) {
                    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
                    done[leaf] = 1;
                    --deg[v];
                    break;
                }
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!done[v]) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        return edges;
    };
    std::set<std::string> skeleton_seen;
    while (true) {
        auto edges = decode();
        std::vector<std::pair<int, int>> oriented(edges);
        OrientedTree probe(n, std::move(oriented));
        if (skeleton_seen.insert(undirected_canonical_code(probe)).second)
            skeletons.push_back(std::move(edges));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }

    std::set<std::string> seen;
    std::vector<OrientedTree> out;
    for (const auto& skel : skeletons) {
        int m = n - 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i) {
                auto [a, b] = skel[i];
                if (mask & (1 << i)) edges.emplace_back(a, b);
                else edges.emplace_back(b, a);
            }
            OrientedTree t(n, std::move(edges));
            if (seen.insert(canonical_tree_code(t)).second) out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<OrientedTree> enumerate_oriented_paths(int length, int l) {
    if (length < 0) throw std::invalid_argument("length must be non-negative");
    if (length == 0) return l == 0 ? std::vector<OrientedTree>{OrientedTree(1, {})}
                                   : std::vector<OrientedTree>{};
    std::vector<OrientedTree> out;
    std::set<std::string> seen;
    std::vector<int> blocks;
    std::function<void(int)> gen = [&](int rest) {
        if (rest == 0) {
            if (*std::max_element(blocks.begin(), blocks.end()) != l) return;
            for (bool fwd : {true, false}) {
                OrientedTree p = oriented_path_from_blocks(blocks, fwd);
                if (seen.insert(canonical_tree_code(p)).second) out.push_back(std::move(p));
            }
            return;
        }
        for (int b = 1; b <= std::min(rest, l); ++b) {
            blocks.push_back(b);
            gen(rest - b);
            blocks.pop_back();
        }
    };
    if (l >= 1 && l <= length) gen(length);
    return out;
}

std::optional<OrientedTree> named_tree(const std::string& name) {
    auto suffix_number = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        int v = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            v = v * 10 + (name[i] - '0');
        }
        return v >= 1 && v <= 64 ? std::optional<int>(v) : std::nullopt;
    };
    if (auto k = suffix_number("p")) return directed_path(*k);
    if (auto k = suffix_number("outstar")) return out_star(*k);
    if (auto k = suffix_number("instar")) return in_star(*k);
    return std::nullopt;
}

} // namespace diramsey
