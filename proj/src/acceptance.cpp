#include "diramsey/acceptance.hpp"

#include "diramsey/constructions.hpp"
#include "diramsey/embedders.hpp"
#include "diramsey/enumerate.hpp"
#include "diramsey/exact.hpp"
#include "diramsey/instances.hpp"
#include "diramsey/oracle.hpp"
#include "diramsey/tree_catalog.hpp"
#include "diramsey/tree_ops.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

namespace diramsey {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    long long checks = 0;
    std::ostringstream why;

    void expect(bool cond, const std::string& msg) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            why << msg;
        }
    }
};

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_exact_oriented(const AcceptanceOptions& options) {
    Check c;
    SearchOptions so;
    so.jobs = options.jobs;
    auto p2 = directed_path(2), p3 = directed_path(3);
    auto r1 = oriented_ramsey_exact({p2, p2}, 4, so);
    c.expect(r1.value && *r1.value == 2, "RT(P2,2) != 2");
    auto r2 = oriented_ramsey_exact({p3, p3}, 6, so);
    c.expect(r2.value && *r2.value == 5, "RT(P3,2) != 5");
    std::ostringstream d;
    d << "RT(P2,2)=" << (r1.value ? *r1.value : -1) << " RT(P3,2)="
      << (r2.value ? *r2.value : -1) << " (colourings tested: "
      << r1.stats.colourings_tested + r2.stats.colourings_tested << ")";
    return {1, "exact oriented path values", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// ---------------------------------------------------------------- criterion 2

CriterionResult criterion_exact_directed(const AcceptanceOptions& options) {
    Check c;
    SearchOptions so;
    so.jobs = options.jobs;
    auto p3 = directed_path(3), p4 = directed_path(4);
    auto r1 = directed_ramsey_exact({p3, p3}, 5, so);
    c.expect(r1.value && *r1.value == 3, "R(P3,P3) != 3");
    auto r2 = directed_ramsey_exact({p3, p4}, 6, so);
    c.expect(r2.value && *r2.value == 4, "R(P3,P4) != 4");
    auto r3 = directed_ramsey_exact({p4, p4}, 6, so);
    c.expect(r3.value && *r3.value == 5, "R(P4,P4) != 5");
    std::ostringstream d;
    d << "R(P3,P3)=" << (r1.value ? *r1.value : -1) << " R(P3,P4)="
      << (r2.value ? *r2.value : -1) << " R(P4,P4)=" << (r3.value ? *r3.value : -1);
    return {2, "exact directed path values", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// ---------------------------------------------------------------- criterion 3

CriterionResult criterion_constructions(const AcceptanceOptions&) {
    Check c;
    long long paths_checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= 3; ++l)
            for (int k = 1; k <= 3; ++k) {
                auto paths = enumerate_oriented_paths(n, l);
                LexiConstruction lex = build_lexicographic(n, l, k);
                c.expect(lex.verification.ok,
                         "lexicographic self-verification failed at n=" + std::to_string(n));
                c.expect(lex.host.order() == n * static_cast<int>(std::pow(l, k - 1)),
                         "lexicographic order wrong");
                ForbiddenSpec spec;
                for (const auto& p : paths) spec.forbidden_trees.emplace_back(0, p);
                auto report = verify_construction(lex.host, spec);
                paths_checked += static_cast<long long>(paths.size());
                std::ostringstream id;
                id << "monochromatic path found in lex(n=" << n << ",l=" << l << ",k=" << k
                   << ")";
                c.expect(report.ok, id.str());
            }
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k) {
            LayeredStage stage = k == 2 ? LayeredStage::Doubled : LayeredStage::BlownUp;
            LayeredConstruction lay = build_layered(n, k, stage);
            int expected = (k == 2 ? 2 : 4) * static_cast<int>(std::pow(n, k - 1));
            c.expect(lay.host.order() == expected, "layered order wrong");
            ForbiddenSpec spec;
            for (int col = 1; col <= k; ++col) spec.max_path_length[col] = 2 * n - 1;
            auto report = verify_construction(lay.host, spec);
            std::ostringstream id;
            id << "monochromatic path of length 2n in layered(n=" << n << ",k=" << k << ")";
            c.expect(report.ok, id.str());
        }
    std::ostringstream d;
    d << "lexicographic 36 cases (" << paths_checked << " path targets), layered 6 cases";
    return {3, "lower-bound constructions verified", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// ---------------------------------------------------------------- criterion 4

void validate_independent(Check& c, const ColourView& g, const std::vector<int>& vertices,
                          long long min_size, const std::string& what) {
    c.expect(static_cast<long long>(vertices.size()) >= min_size, what + ": set too small");
    c.expect(is_independent_in_view(g, vertices), what + ": set not independent");
}

void runs_ghrv(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int n = 3 + static_cast<int>(rng() % 48);
        double p = 0.05 + 0.9 * (rng() % 100) / 100.0;
        ColouredDigraph g = random_digraph(n, p, rng);
        ColourView view(g, 1);
        int target = 1 + static_cast<int>(rng() % (n / 2 + 1));
        GhrvOutcome out = ghrv_dichotomy(view, target);
        if (auto* path = std::get_if<VertexPath>(&out.result)) {
            c.expect(static_cast<int>(path->vertices.size()) >= target + 1,
                     "ghrv path shorter than target");
            bool edges_ok = true;
            for (std::size_t j = 0; j + 1 < path->vertices.size(); ++j)
                edges_ok = edges_ok && view.edge(path->vertices[j], path->vertices[j + 1]);
            c.expect(edges_ok, "ghrv path edge missing");
        } else {
            auto& s = std::get<IndependentSet>(out.result);
            validate_independent(c, view, s.vertices, (n + target - 1) / std::max(target, 1),
                                 "ghrv");
        }
    }
}

void runs_mindegree(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int n = 4 + static_cast<int>(rng() % 56);
        ColouredDigraph g = random_digraph(n, 0.55 + 0.4 * (rng() % 10) / 10.0, rng);
        ColourView view(g, 1);
        std::int64_t e = static_cast<std::int64_t>(view.edge_count());
        // the densest epsilon this instance can afford
        Rational eps{2 * e, static_cast<std::int64_t>(n) * (n - 1)};
        if (eps.num == 0) continue;
        MindegreePair pair = find_mindegree_pair(view, eps);
        c.expect(!check_mindegree_pair(view, pair).has_value(), "mindegree pair invalid");
    }
}

void runs_embed_path(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        bool adversarial = (rng() % 4) == 0;
        if (!adversarial) {
            int m = 24 + static_cast<int>(rng() % 40);
            ColouredDigraph g = random_complete_digraph(m, 1, rng);
            ColourView view(g, 1);
            MindegreePair pair = find_mindegree_pair(view, Rational{2, 1});
            int maxlen = pair.threshold - 1;
            if (maxlen < 1) continue;
            int len = 1 + static_cast<int>(rng() % std::min(maxlen, 8));
            std::vector<int> blocks;
            int rest = len;
            while (rest > 0) {
                int b = 1 + static_cast<int>(rng() % rest);
                blocks.push_back(b);
                rest -= b;
            }
            OrientedTree path = oriented_path_from_blocks(blocks, rng() % 2 == 0);
            auto out = embed_path_or_independent(view, pair, path);
            if (auto* emb = std::get_if<Embedding>(&out))
                c.expect(!check_embedding(g, path, *emb).has_value(), "path embedding invalid");
            else
                c.expect(false, "complete host returned an independent set");
        } else {
            // colour class = complete bipartite X -> Y with Y internally empty:
            // long blocks cannot continue inside Y, so the independent branch fires
            int half = 6 + static_cast<int>(rng() % 10);
            std::vector<ColouredDigraph::Edge> edges;
            for (int a = 0; a < half; ++a)
                for (int b = 0; b < half; ++b) {
                    edges.push_back({a, half + b, 1});
                    edges.push_back({half + b, a, 1});
                }
            ColouredDigraph g(2 * half, HostKind::General, 1, edges);
            ColourView view(g, 1);
            MindegreePair pair;
            pair.threshold = half;
            pair.colour = 1;
            pair.X = Bitset(2 * half);
            pair.Y = Bitset(2 * half);
            for (int a = 0; a < half; ++a) pair.X.set(a), pair.Y.set(half + a);
            c.expect(!check_mindegree_pair(view, pair).has_value(), "constructed pair invalid");
            OrientedTree path = directed_path(3); // one block of length 2
            if (pair.threshold <= 2) continue;
            auto out = embed_path_or_independent(view, pair, path);
            if (auto* s = std::get_if<IndependentSet>(&out))
                validate_independent(c, view, s->vertices, (pair.threshold - 2 + 1) / 2,
                                     "path/indep");
            else
                c.expect(false, "bipartite class embedded a directed P3");
        }
    }
}

void runs_dfs_partition(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int n = 4 + static_cast<int>(rng() % 24);
        ColouredDigraph g = random_digraph(n, 0.1 + 0.8 * (rng() % 10) / 10.0, rng);
        OrientedTree t = random_out_tree(2 + static_cast<int>(rng() % 7), rng);
        ColourView view(g, 1);
        auto out = dfs_partition(view, t);
        if (auto* emb = std::get_if<Embedding>(&out))
            c.expect(!check_embedding(g, t, *emb).has_value(), "dfs embedding invalid");
        else
            c.expect(!check_tri_partition(view, t, std::get<TriPartition>(out)).has_value(),
                     "tri-partition invalid");
    }
}

void runs_bidirected(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int m = 8 + static_cast<int>(rng() % 32);
        // start all colour 1, recolour under a quarter of the pairs
        std::vector<ColouredDigraph::Edge> edges;
        long long budget = static_cast<long long>(m) * (m - 1) / 8;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b) {
                    int col = (budget > 0 && rng() % 8 == 0) ? (--budget, 2) : 1;
                    edges.push_back({a, b, col});
                }
        ColouredDigraph g(m, HostKind::CompleteDigraph, 2, edges);
        Rational eps{1, 2};
        int cap = static_cast<int>((eps.num * m + 2 * eps.den - 1) / (2 * eps.den));
        OrientedTree t = random_tree(1 + static_cast<int>(rng() % std::max(1, cap)), rng);
        Embedding e = bidirected_greedy_embed(g, 1, eps, t);
        c.expect(!check_embedding(g, t, e).has_value(), "bidirected embedding invalid");
    }
}

void runs_low_outdegree(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int k = static_cast<int>(rng() % 3);
        int l = 1 + static_cast<int>(rng() % 5);
        int m = 2 * k + 2 * l + static_cast<int>(rng() % 10);
        // low red out-degree on the first 2k+2l vertices, red elsewhere at random
        std::vector<ColouredDigraph::Edge> edges;
        std::vector<int> red_left(m, 0);
        for (int v = 0; v < m; ++v) red_left[v] = v < 2 * k + 2 * l ? k : m;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b) {
                    bool red = red_left[a] > 0 && (rng() % 3 == 0);
                    if (red) --red_left[a];
                    edges.push_back({a, b, red ? 1 : 2});
                }
        ColouredDigraph g(m, HostKind::CompleteDigraph, 2, edges);
        OrientedTree t = random_tree(1 + static_cast<int>(rng() % l), rng);
        Embedding e = low_outdegree_embed(g, k, l, t);
        c.expect(e.colour == 2, "embedding not blue");
        c.expect(!check_embedding(g, t, e).has_value(), "low-outdegree embedding invalid");
    }
}

void runs_tree_or_independent(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        OrientedTree t = rng() % 2 == 0 ? directed_path(2 + rng() % 5)
                                        : random_out_tree(2 + rng() % 4, rng);
        int m = 2 + static_cast<int>(rng() % 2);
        std::int64_t need = tree_or_independent_threshold(t, m);
        if (need > 420) continue;
        int order = static_cast<int>(need) + static_cast<int>(rng() % 20);
        double p = (rng() % 10) / 10.0;
        ColouredDigraph g = random_digraph(order, p, rng);
        ColourView view(g, 1);
        auto out = tree_or_independent(view, t, m);
        if (auto* emb = std::get_if<Embedding>(&out))
            c.expect(!check_embedding(g, t, *emb).has_value(), "tree/indep embedding invalid");
        else
            validate_independent(c, view, std::get<IndependentSet>(out).vertices, m,
                                 "tree/indep");
    }
}

void runs_layered(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int tree_order = 2 + static_cast<int>(rng() % 3);
        int m = 16 * tree_order - 12 + static_cast<int>(rng() % 12);
        ColouredDigraph g = random_complete_digraph(m, 1, rng);
        ColourView view(g, 1);
        MindegreePair pair = find_mindegree_pair(view, Rational{2, 1});
        OrientedTree t = random_tree(tree_order, rng);
        int root = static_cast<int>(rng() % tree_order);
        LayeredEmbedResult res = layered_embed(g, 1, pair, t, root);
        c.expect(res.guaranteed, "layered instance unexpectedly below guarantee");
        c.expect(res.embedding.has_value(), "layered embedding missed on a complete class");
        if (res.embedding)
            c.expect(!check_embedding(g, t, *res.embedding).has_value(),
                     "layered embedding invalid");
    }
}

void runs_ramsey_path_random(Check& c, std::mt19937& rng, int count) {
    // sampled at (or above) the a_k threshold; the pipeline itself must land
    for (int i = 0; i < count; ++i) {
        OrientedTree path = i % 3 == 0   ? directed_path(2)
                            : i % 3 == 1 ? oriented_path_from_blocks({1, 1}, true)
                                         : directed_path(3);
        int n_len = path.order() - 1;
        int l = block_decomposition(path).longest_block_length;
        auto need = static_cast<int>(path_induction_constant(2) *
                                     static_cast<std::uint64_t>(n_len) *
                                     static_cast<std::uint64_t>(l));
        int m = need + static_cast<int>(rng() % 40);
        ColouredDigraph g = random_tournament(m, 2, rng);
        RamseyEmbedResult res = ramsey_path_embed_tournament(g, path);
        c.expect(res.guaranteed, "sampled host unexpectedly below threshold");
        c.expect(res.embedding.has_value(), "pipeline missed above its guarantee");
        c.expect(!res.via_fallback, "pipeline needed the oracle above its guarantee");
        if (res.embedding)
            c.expect(!check_embedding(g, path, *res.embedding).has_value(),
                     "ramsey path embedding invalid");
    }
}

void runs_ramsey_tree_random(Check& c, std::mt19937& rng, int count) {
    for (int i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            // k = 1 at the El Sahili bound: success is guaranteed
            OrientedTree t = random_tree(2 + static_cast<int>(rng() % 4), rng);
            int m = 3 * t.order() - 3 + static_cast<int>(rng() % 8);
            ColouredDigraph g = random_tournament(m, 1, rng);
            RamseyEmbedResult res = ramsey_tree_embed_tournament(g, {t});
            c.expect(res.embedding.has_value(), "k=1 embedder missed at 3n-3");
            if (res.embedding)
                c.expect(!check_embedding(g, t, *res.embedding).has_value(),
                         "k=1 embedding invalid");
        } else {
            int k = 2 + static_cast<int>(rng() % 2);
            std::vector<OrientedTree> trees;
            for (int j = 0; j < k; ++j) trees.push_back(random_tree(2 + rng() % 3, rng));
            int m = 10 + static_cast<int>(rng() % 30);
            ColouredDigraph g = random_tournament(m, k, rng);
            RamseyEmbedResult res =
                ramsey_tree_embed_tournament(g, trees, static_cast<int>(rng() % (k + 1)));
            if (res.embedding) {
                c.expect(!check_embedding(g, trees[res.embedding->colour - 1],
                                          *res.embedding)
                              .has_value(),
                         "ramsey tree embedding invalid");
            }
        }
    }
}

// every tournament and colouring at the exact Ramsey order: zero misses
void exhaustive_path_misses(Check& c, const AcceptanceOptions& options, long long& runs) {
    struct Family {
        OrientedTree path;
        std::string name;
    };
    std::vector<Family> family{{directed_path(2), "P2"},
                               {directed_path(3), "P3"},
                               {oriented_path_from_blocks({1, 1}, true), "P(fwd,bwd)"},
                               {oriented_path_from_blocks({1, 1}, false), "P(bwd,fwd)"}};
    SearchOptions so;
    so.jobs = options.jobs;
    for (const auto& f : family) {
        auto search = oriented_ramsey_exact({f.path, f.path}, 7, so);
        c.expect(search.value.has_value(), "RT(" + f.name + ",2) not determined by order 7");
        if (!search.value) continue;
        int rt = *search.value;
        enumerate_tournaments(rt, [&](const TournamentCode& code) {
            const int edges = rt * (rt - 1) / 2;
            std::vector<int> cols(edges, 1);
            while (true) {
                ColouredDigraph host = tournament_to_host(code, 2, cols);
                RamseyEmbedResult res = ramsey_path_embed_tournament(host, f.path);
                ++runs;
                if (!res.embedding) {
                    c.expect(false, "miss for " + f.name + " at the Ramsey order");
                    return;
                }
                if (check_embedding(host, f.path, *res.embedding))
                    c.expect(false, "invalid certificate for " + f.name);
                int i = 0;
                while (i < edges && cols[i] == 2) cols[i++] = 1;
                if (i == edges) break;
                cols[i] = 2;
            }
        }, 8);
    }
}

CriterionResult criterion_embedder_soundness(const AcceptanceOptions& options) {
    Check c;
    std::mt19937 rng(options.seed);
    constexpr int kGhrv = 2200, kMindeg = 1500, kPath = 1000, kDfs = 1500, kBid = 1000,
                  kLow = 1000, kToi = 700, kLay = 400, kRamPath = 200, kRamTree = 500;
    static_assert(kGhrv + kMindeg + kPath + kDfs + kBid + kLow + kToi + kLay + kRamPath +
                          kRamTree ==
                      10000,
                  "criterion 4 fixes 10,000 randomized runs");
    runs_ghrv(c, rng, kGhrv);
    runs_mindegree(c, rng, kMindeg);
    runs_embed_path(c, rng, kPath);
    runs_dfs_partition(c, rng, kDfs);
    runs_bidirected(c, rng, kBid);
    runs_low_outdegree(c, rng, kLow);
    runs_tree_or_independent(c, rng, kToi);
    runs_layered(c, rng, kLay);
    runs_ramsey_path_random(c, rng, kRamPath);
    runs_ramsey_tree_random(c, rng, kRamTree);
    long long exhaustive_runs = 0;
    exhaustive_path_misses(c, options, exhaustive_runs);
    std::ostringstream d;
    d << "10000 randomized runs, zero invalid certificates; " << exhaustive_runs
      << " exhaustive embedder runs at the exact Ramsey orders, zero misses";
    return {4, "embedder soundness", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// ---------------------------------------------------------------- criterion 5

CriterionResult criterion_structural_lemmas(const AcceptanceOptions& options) {
    Check c;
    std::mt19937 rng(options.seed + 1);
    long long core_checks = 0, closure_checks = 0, degleaf_checks = 0;

    for (int n = 1; n <= 8; ++n) {
        auto trees = enumerate_rooted_trees(n);
        for (const auto& t : trees) {
            for (int k = 2; k <= 8; ++k) {
                auto core = k_core(t, k);
                c.expect(core.has_value(), "core empty for k >= 2");
                if (!core) continue;
                RootedView rv(core->tree, *core->tree.root());
                int leaves = 0;
                for (int v = 0; v < core->tree.order(); ++v)
                    if (rv.children[v].empty()) ++leaves;
                c.expect(leaves <= k, "core has more than k leaves");
                ++core_checks;
            }
            {
                int l = out_leaves(t);
                SymmetricClosure sc = symmetric_closure(t);
                double bound = std::pow(static_cast<double>(l), l);
                c.expect(is_symmetric_out_tree(sc.tree), "closure not symmetric");
                c.expect(sc.tree.order() <= bound * t.order(), "closure order above l^l * |T|");
                c.expect(out_leaves(sc.tree) <= bound, "closure has more than l^l out-leaves");
                // containment oracle: the closure hosts its input
                std::vector<ColouredDigraph::Edge> edges;
                for (auto [a, b] : sc.tree.edges()) edges.push_back({a, b, 1});
                ColouredDigraph host(sc.tree.order(), HostKind::General, 1, edges);
                auto emb = contains_monochromatic_copy(host, 1, t);
                c.expect(emb.has_value(), "closure does not contain its input");
                ++closure_checks;
            }
            {
                // degree/leaf inequality over every vertex subset
                for (int mask = 0; mask < (1 << n); ++mask) {
                    std::vector<int> sel;
                    for (int v = 0; v < n; ++v)
                        if (mask & (1 << v)) sel.push_back(v);
                    c.expect(check_degree_leaf_bound(t, sel), "degree/leaf bound violated");
                    ++degleaf_checks;
                }
            }
        }
    }

    for (int i = 0; i < 1000; ++i) {
        int n = 4 + static_cast<int>(rng() % 24);
        ColouredDigraph g = random_digraph(n, 0.1 + 0.8 * (rng() % 10) / 10.0, rng);
        OrientedTree t = random_out_tree(2 + static_cast<int>(rng() % 7), rng);
        ColourView view(g, 1);
        auto out = dfs_partition(view, t);
        if (auto* emb = std::get_if<Embedding>(&out))
            c.expect(!check_embedding(g, t, *emb).has_value(), "dfs embedding invalid");
        else
            c.expect(!check_tri_partition(view, t, std::get<TriPartition>(out)).has_value(),
                     "tri-partition invariant violated");
    }

    std::ostringstream d;
    d << core_checks << " core checks, " << closure_checks << " closures, " << degleaf_checks
      << " degree/leaf subsets, 1000 dfs partitions; zero violations";
    return {5, "structural lemmas as property suites", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// ---------------------------------------------------------------- criterion 6

CriterionResult criterion_sumner_el_sahili(const AcceptanceOptions& options) {
    Check c;
    std::ostringstream d;
    std::mt19937 rng(options.seed + 2);

    for (int n = 2; n <= options.sumner_max_n; ++n) {
        auto trees = enumerate_oriented_trees(n);
        long long hosts = 0;
        enumerate_tournaments(2 * n - 2, [&](const TournamentCode& code) {
            ++hosts;
            ColouredDigraph host = tournament_to_host(code, 1, {});
            for (const auto& t : trees)
                if (!contains_monochromatic_copy(host, 1, t)) {
                    c.expect(false, "Sumner failure at n=" + std::to_string(n));
                    return;
                }
        }, 8);
        d << "sumner n=" << n << ": " << hosts << " hosts x " << trees.size() << " trees; ";
    }

    for (int n = 2; n <= 5; ++n) {
        auto trees = enumerate_oriented_trees(n);
        const int host_order = 3 * n - 3;
        if (n <= options.el_sahili_exhaustive_max_n) {
            long long hosts = 0;
            enumerate_tournaments(host_order, [&](const TournamentCode& code) {
                ++hosts;
                ColouredDigraph host = tournament_to_host(code, 1, {});
                for (const auto& t : trees) {
                    RamseyEmbedResult res = ramsey_tree_embed_tournament(host, {t});
                    if (!res.embedding) {
                        c.expect(false, "El Sahili failure at n=" + std::to_string(n));
                        return;
                    }
                }
            }, host_order);
            d << "el-sahili n=" << n << ": " << hosts << " hosts exhaustive; ";
        } else {
            // 3n-3 = 12: exhaustive enumeration is out of reach (~1.5e11
            // classes). Every 12-vertex tournament restricts to an 8-vertex
            // one, which the Sumner pass above covers exhaustively, and the
            // embedder is additionally sampled here.
            for (int i = 0; i < options.el_sahili_samples; ++i) {
                ColouredDigraph host = random_tournament(host_order, 1, rng);
                for (const auto& t : trees) {
                    RamseyEmbedResult res = ramsey_tree_embed_tournament(host, {t});
                    c.expect(res.embedding.has_value(),
                             "El Sahili sampled failure at n=" + std::to_string(n));
                }
            }
            d << "el-sahili n=" << n << ": implied by the exhaustive 2n-2 pass, plus "
              << options.el_sahili_samples << " sampled hosts; ";
        }
    }
    return {6, "Sumner and El Sahili small-scale checks", c.ok, c.ok ? d.str() : c.why.str(),
            0};
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(const AcceptanceOptions& options,
                                                  std::ostream& log) {
    std::vector<CriterionResult> results;
    auto timed = [&](auto&& fn) {
        auto start = Clock::now();
        CriterionResult r = fn(options);
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(r);
        log << "criterion " << r.index << " [" << r.name << "]: "
            << (r.pass ? "PASS" : "FAIL") << " - " << r.detail << " ("
            << r.seconds << "s)\n";
        log.flush();
    };
    timed(criterion_exact_oriented);
    timed(criterion_exact_directed);
    timed(criterion_constructions);
    timed(criterion_embedder_soundness);
    timed(criterion_structural_lemmas);
    timed(criterion_sumner_el_sahili);
    return results;
}

bool print_acceptance_results(std::ostream& out, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    out << (all ? "acceptance suite: ALL PASS" : "acceptance suite: FAILURES") << "\n";
    return all;
}

} // namespace diramsey
