#pragma once

#include "diramsey/embedding.hpp"
#include "diramsey/ghrv.hpp"
#include "diramsey/mindegree.hpp"
#include "diramsey/oriented_tree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace diramsey {

// Machine-parseable proof-step trace: `step=<name> case=<..> sizes=<..>`.
using TraceFn = std::function<void(const std::string&)>;

// --- guarantee constants -------------------------------------------------

// (8k)^k, the pair constant of the multi-tree tournament argument.
std::int64_t tree_pair_constant(int k);
// (8^k - 2) * k!, the induction constant of the path argument (saturates).
std::uint64_t path_induction_constant(int k);
// 8^k * k!, the stated path Ramsey constant (saturates).
std::uint64_t path_ramsey_constant(int k);
// recursion c_1 = 1, c_l = c_{l-1} + 2l for the tree-vs-independent-set bound.
std::int64_t indep_set_constant(std::int64_t leaves);
// absolute constant of the path-vs-out-tree bound.
constexpr int path_vs_tree_constant = 79;
// log of f_{k,l}(x_1..x_l) = (2a)^{x_1+...+x_l + (k-l)(2a+1)}; the value
// itself overflows anything fixed-width almost immediately.
long double log_tree_guarantee(int k, int l, const std::vector<int>& leaf_counts);

// --- certificates --------------------------------------------------------

// Partition produced by the DFS process: U hosts a partial embedding of a
// subtree, |X| = |Y|, and every x in X has fewer than |T| out-neighbours
// in Y. partial_map[tree vertex] is the host image or -1.
struct TriPartition {
    Bitset U, X, Y;
    std::vector<int> partial_map;
};
std::optional<std::string> check_tri_partition(const ColourView& g, const OrientedTree& t,
                                               const TriPartition& p);

struct RamseyEmbedResult {
    std::optional<Embedding> embedding; // colour stored inside
    bool guaranteed = false;            // host met the proof threshold
    bool via_fallback = false;          // certificate from the exhaustive oracle
};

// --- operations ----------------------------------------------------------

// Path-or-independent-set dichotomy: walk the blocks of P alternately from
// X into out-neighbourhoods in Y and back, getting each directed block from
// the GHRV dichotomy; surface any independent set of size
// >= ceil((threshold - n) / l) instead. Requires pair.threshold > length(P).
std::variant<Embedding, IndependentSet> embed_path_or_independent(const ColourView& g,
                                                                  const MindegreePair& pair,
                                                                  const OrientedTree& path);

// DFS process for an out-directed tree: either embeds T or produces a
// TriPartition witnessing that G is locally sparse.
std::variant<Embedding, TriPartition> dfs_partition(const ColourView& g, const OrientedTree& t,
                                                    const TraceFn& trace = {});

// With at least (1+eps) * C(n,2) edges in `colour`, peel vertices of
// bidirected degree < eps*n/2 and embed greedily over bidirected pairs.
// Requires |T| <= ceil(eps*n/2).
Embedding bidirected_greedy_embed(const ColouredDigraph& host, int colour, Rational eps,
                                  const OrientedTree& tree);

// Two-colour host (1 = red, 2 = blue): with >= 2k+2l vertices of red
// out-degree <= k, embeds any tree on at most l vertices in blue.
Embedding low_outdegree_embed(const ColouredDigraph& host, int max_red_outdegree, int l,
                              const OrientedTree& tree);

// Out-directed T with few out-leaves vs independent set of size m: the
// symmetric-closure induction. Requires |G| >= c_λ * |closure| * m where
// λ is the closure's out-leaf count; use tree_or_independent_threshold.
std::variant<Embedding, IndependentSet> tree_or_independent(const ColourView& g,
                                                            const OrientedTree& tree, int m);
std::int64_t tree_or_independent_threshold(const OrientedTree& tree, int m);

// Layer-by-layer embedding of an arbitrarily oriented tree through a
// mindegree pair, delegating each one-way subtree to `sub` (defaults to the
// exhaustive oracle). Below pair.threshold >= 4|T|-3 the result is
// best-effort and a miss is flagged, never fabricated.
using SubEmbedder = std::function<std::optional<Embedding>(const ColourView&, const OrientedTree&)>;
struct LayeredEmbedResult {
    std::optional<Embedding> embedding;
    bool guaranteed = false;
};
LayeredEmbedResult layered_embed(const ColouredDigraph& host, int colour,
                                 const MindegreePair& pair, const OrientedTree& tree, int root,
                                 const SubEmbedder& sub = {}, const TraceFn& trace = {});

// Monochromatic oriented path in a k-coloured tournament: majority colour,
// mindegree pair at eps = 1/k, path-or-independent, recurse on the
// independent set with one colour fewer; El Sahili-style complete
// backtracking at k = 1. Guaranteed at |host| >= a_k * n * l^(k-1); below
// that it falls back to the exhaustive oracle and may flag a miss.
RamseyEmbedResult ramsey_path_embed_tournament(const ColouredDigraph& host,
                                               const OrientedTree& path,
                                               const TraceFn& trace = {});

// Monochromatic T_i for some colour i in a k-coloured tournament, executing
// the iterated majority-colour / mindegree-pair process with its two cases
// (leaf stripping, core-and-hang). l_tracked leading trees have their leaf
// counts carried by the induction. Desk-scale hosts are always below the
// (astronomical) threshold, so misses fall back to the oracle.
RamseyEmbedResult ramsey_tree_embed_tournament(const ColouredDigraph& host,
                                               const std::vector<OrientedTree>& trees,
                                               int l_tracked = 0, const TraceFn& trace = {});

} // namespace diramsey
