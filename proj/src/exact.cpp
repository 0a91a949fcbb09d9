#include "diramsey/exact.hpp"

#include "diramsey/enumerate.hpp"
#include "diramsey/oracle.hpp"
#include "diramsey/tree_catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace diramsey {

namespace {

constexpr int kMaxSearchOrder = 10; // uint16 adjacency masks

// placement plan: tree vertices in DFS order from a centroid, each (after
// the first) adjacent to an earlier one
struct TreePlan {
    int order;
    std::vector<int> vertex;
    std::vector<int> parent_pos;
    std::vector<char> from_parent; // 1: parent -> child edge
};

TreePlan plan_tree(const OrientedTree& t) {
    TreePlan plan;
    plan.order = t.order();
    std::vector<char> vis(t.order(), 0);
    std::vector<int> pos_of(t.order(), -1);
    std::vector<std::tuple<int, int, char>> stack{{tree_centroid(t), -1, 0}};
    while (!stack.empty()) {
        auto [v, ppos, dir] = stack.back();
        stack.pop_back();
        if (vis[v]) continue;
        vis[v] = 1;
        pos_of[v] = static_cast<int>(plan.vertex.size());
        plan.vertex.push_back(v);
        plan.parent_pos.push_back(ppos);
        plan.from_parent.push_back(dir);
        for (int w : t.out_neighbours(v))
            if (!vis[w]) stack.emplace_back(w, pos_of[v], 1);
        for (int w : t.in_neighbours(v))
            if (!vis[w]) stack.emplace_back(w, pos_of[v], 0);
    }
    return plan;
}

// recursive containment over mask rows; images carried explicitly
bool rows_contain(const TreePlan& plan, const std::vector<std::uint16_t>& out,
                  const std::vector<std::uint16_t>& in, int m, std::size_t p,
                  std::uint16_t used, int* image) {
    if (p == plan.vertex.size()) return true;
    std::uint16_t cand;
    if (plan.parent_pos[p] < 0)
        cand = static_cast<std::uint16_t>((1u << m) - 1);
    else {
        int pimg = image[plan.parent_pos[p]];
        cand = plan.from_parent[p] ? out[pimg] : in[pimg];
    }
    cand &= static_cast<std::uint16_t>(~used);
    while (cand) {
        int v = __builtin_ctz(cand);
        cand &= static_cast<std::uint16_t>(cand - 1);
        image[p] = v;
        if (rows_contain(plan, out, in, m, p + 1, used | (1u << v), image)) return true;
    }
    return false;
}

struct HostTask {
    int m = 0;                              // host order
    std::vector<std::pair<int, int>> edges; // fixed canonical assignment order
    std::vector<std::vector<int>> edge_perms; // automorphism action on edge positions
    std::vector<int> perm_closed_at;          // first depth at which the prefix is closed
};

// avoiding-colouring search on one host; returns the first avoiding
// colouring (lowest in DFS order) or nullopt
struct AvoidSearch {
    const HostTask& host;
    const std::vector<TreePlan>& plans;
    const std::vector<int>& first_edge_colours; // colour-class representatives
    int k;
    SearchStats stats;

    std::vector<int> colour;                     // per edge, 0 = unassigned
    std::vector<std::vector<std::uint16_t>> out; // [colour-1][vertex]
    std::vector<std::vector<std::uint16_t>> in;
    std::vector<int> scratch;

    std::vector<int> all_colours;

    AvoidSearch(const HostTask& h, const std::vector<TreePlan>& p,
                const std::vector<int>& firsts, int k_)
        : host(h), plans(p), first_edge_colours(firsts), k(k_) {
        colour.assign(host.edges.size(), 0);
        out.assign(k, std::vector<std::uint16_t>(host.m, 0));
        in.assign(k, std::vector<std::uint16_t>(host.m, 0));
        scratch.assign(16, -1);
        for (int c = 1; c <= k; ++c) all_colours.push_back(c);
    }

    bool dominated(std::size_t depth) {
        for (std::size_t s = 0; s < host.edge_perms.size(); ++s) {
            if (host.perm_closed_at[s] != static_cast<int>(depth)) continue;
            // compare the permuted prefix against the current one
            const auto& perm = host.edge_perms[s];
            for (std::size_t j = 0; j <= depth; ++j) {
                int a = colour[perm[j]], b = colour[j];
                if (a == b) continue;
                if (a < b) return true;
                break;
            }
        }
        return false;
    }

    bool search(std::size_t e) {
        if (e == host.edges.size()) {
            ++stats.colourings_tested;
            return true;
        }
        auto [u, v] = host.edges[e];
        const std::vector<int>& choices = e == 0 ? first_edge_colours : all_colours;
        for (int c : choices) {
            colour[e] = c;
            out[c - 1][u] |= static_cast<std::uint16_t>(1u << v);
            in[c - 1][v] |= static_cast<std::uint16_t>(1u << u);
            // prune when a monochromatic copy is forced or the prefix is
            // dominated by an automorphic image
            bool pruned =
                (plans[c - 1].order <= host.m &&
                 rows_contain(plans[c - 1], out[c - 1], in[c - 1], host.m, 0, 0,
                              scratch.data())) ||
                (!host.edge_perms.empty() && dominated(e));
            if (pruned) ++stats.prunes;
            if (!pruned && search(e + 1)) return true;
            out[c - 1][u] &= static_cast<std::uint16_t>(~(1u << v));
            in[c - 1][v] &= static_cast<std::uint16_t>(~(1u << u));
            colour[e] = 0;
        }
        return false;
    }
};

std::vector<int> colour_class_representatives(const std::vector<OrientedTree>& targets) {
    // permuting equal targets permutes colourings, so the first edge only
    // needs the lowest colour of each isomorphism class
    std::vector<std::string> codes;
    for (const auto& t : targets) codes.push_back(canonical_tree_code(t));
    std::vector<int> firsts;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        bool repeat = false;
        for (std::size_t j = 0; j < i; ++j)
            if (codes[j] == codes[i]) repeat = true;
        if (!repeat) firsts.push_back(static_cast<int>(i) + 1);
    }
    return firsts;
}

void fill_perm_metadata(HostTask& task, const std::vector<std::vector<int>>& vertex_perms) {
    // position of each ordered pair in the edge order
    std::vector<std::vector<int>> pos(task.m, std::vector<int>(task.m, -1));
    for (std::size_t e = 0; e < task.edges.size(); ++e)
        pos[task.edges[e].first][task.edges[e].second] = static_cast<int>(e);
    for (const auto& sigma : vertex_perms) {
        bool identity = true;
        for (int i = 0; i < task.m; ++i)
            if (sigma[i] != i) identity = false;
        if (identity) continue;
        std::vector<int> eperm(task.edges.size());
        bool ok = true;
        for (std::size_t e = 0; e < task.edges.size() && ok; ++e) {
            auto [u, v] = task.edges[e];
            int p = pos[sigma[u]][sigma[v]];
            if (p < 0) ok = false;
            eperm[e] = p;
        }
        if (!ok) continue;
        // the first edge also carries the colour-class restriction, so only
        // automorphisms fixing its position keep domination images inside
        // the searched space
        if (eperm[0] != 0) continue;
        int running_max = -1, closed_at = -1;
        for (std::size_t e = 0; e < eperm.size(); ++e) {
            running_max = std::max(running_max, eperm[e]);
            if (running_max == static_cast<int>(e)) {
                closed_at = static_cast<int>(e);
                break; // first closure depth is where domination is cheapest
            }
        }
        if (closed_at < 0) continue;
        task.edge_perms.push_back(std::move(eperm));
        task.perm_closed_at.push_back(closed_at);
    }
}

struct OrderProbe {
    bool avoiding_found = false;
    std::optional<ColouredDigraph> witness;
    SearchStats stats;
};

int effective_enumeration_limit(const SearchOptions& options, int colours) {
    if (options.enumeration_limit > 0) return options.enumeration_limit;
    return colours <= 2 ? 7 : 5;
}

OrderProbe probe_order_oriented(int m, const std::vector<OrientedTree>& targets,
                                const std::vector<TreePlan>& plans,
                                const std::vector<int>& firsts, const SearchOptions& options) {
    OrderProbe probe;
    const int k = static_cast<int>(targets.size());
    std::vector<TournamentCode> hosts =
        enumerate_tournaments(m, effective_enumeration_limit(options, k));
    probe.stats.hosts_enumerated += hosts.size();

    std::vector<std::optional<std::vector<int>>> found(hosts.size());
    std::vector<SearchStats> task_stats(hosts.size());
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= hosts.size()) break;
            HostTask task;
            task.m = m;
            for (int j = 1; j < m; ++j)
                for (int a = 0; a < j; ++a)
                    task.edges.emplace_back(hosts[i].has_edge(a, j) ? std::make_pair(a, j)
                                                                    : std::make_pair(j, a));
            auto autos = tournament_automorphisms(hosts[i]);
            if (autos.size() > 1) fill_perm_metadata(task, autos);
            AvoidSearch search(task, plans, firsts, k);
            if (search.search(0)) found[i] = search.colour;
            task_stats[i] = search.stats;
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < hosts.size(); ++i) {
        probe.stats.merge(task_stats[i]);
        if (found[i] && !probe.avoiding_found) {
            probe.avoiding_found = true;
            std::vector<ColouredDigraph::Edge> edges;
            for (int j = 1; j < m; ++j)
                for (int a = 0; a < j; ++a) {
                    auto [u, v] = hosts[i].has_edge(a, j) ? std::make_pair(a, j)
                                                          : std::make_pair(j, a);
                    edges.push_back({u, v, (*found[i])[edges.size()]});
                }
            probe.witness = ColouredDigraph(m, HostKind::Tournament, k, edges);
        }
    }
    return probe;
}

OrderProbe probe_order_directed(int m, const std::vector<OrientedTree>& targets,
                                const std::vector<TreePlan>& plans,
                                const std::vector<int>& firsts, const SearchOptions& options) {
    OrderProbe probe;
    const int k = static_cast<int>(targets.size());
    probe.stats.hosts_enumerated += 1;

    HostTask task;
    task.m = m;
    for (int j = 1; j < m; ++j)
        for (int a = 0; a < j; ++a) {
            task.edges.emplace_back(a, j);
            task.edges.emplace_back(j, a);
        }
    if (m <= 7) {
        // the complete digraph is vertex-transitive: every permutation acts
        std::vector<std::vector<int>> perms;
        std::vector<int> sigma(m);
        for (int i = 0; i < m; ++i) sigma[i] = i;
        do perms.push_back(sigma);
        while (std::next_permutation(sigma.begin(), sigma.end()));
        fill_perm_metadata(task, perms);
    }

    // one independent task per first-edge colour prefix; merging takes the
    // lowest finder, which is exactly the serial DFS order
    std::vector<std::optional<std::vector<int>>> found(firsts.size());
    std::vector<SearchStats> task_stats(firsts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= firsts.size()) break;
            std::vector<int> prefix{firsts[i]};
            AvoidSearch search(task, plans, prefix, k);
            if (search.search(0)) found[i] = search.colour;
            task_stats[i] = search.stats;
        }
    };
    int jobs = std::max(1, std::min(options.jobs, static_cast<int>(firsts.size())));
    if (jobs == 1 || m < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < firsts.size(); ++i) {
        probe.stats.merge(task_stats[i]);
        if (found[i] && !probe.avoiding_found) {
            probe.avoiding_found = true;
            std::vector<ColouredDigraph::Edge> edges;
            for (std::size_t e = 0; e < task.edges.size(); ++e)
                edges.push_back({task.edges[e].first, task.edges[e].second, (*found[i])[e]});
            probe.witness = ColouredDigraph(m, HostKind::CompleteDigraph, k, edges);
        }
    }
    return probe;
}

SearchResult ramsey_exact(const std::vector<OrientedTree>& targets, int n_max,
                          const SearchOptions& options, bool directed) {
    if (targets.empty()) throw std::invalid_argument("need at least one target tree");
    const int k = static_cast<int>(targets.size());
    if (k > 8) throw std::invalid_argument("at most 8 colours supported");
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");

    SearchResult result;
    result.targets = targets;
    result.colours = k;

    for (const auto& t : targets)
        if (t.order() == 1) {
            // a single vertex is a monochromatic copy in any colouring
            result.value = 1;
            result.conclusive = true;
            return result;
        }

    std::vector<TreePlan> plans;
    for (const auto& t : targets) plans.push_back(plan_tree(t));
    std::vector<int> firsts = colour_class_representatives(targets);

    const double log2k = std::log2(static_cast<double>(k));
    for (int m = 1; m <= n_max; ++m) {
        if (m > kMaxSearchOrder)
            throw std::invalid_argument("search orders beyond 10 are not supported");
        const std::size_t edge_count =
            directed ? static_cast<std::size_t>(m) * (m - 1)
                     : static_cast<std::size_t>(m) * (m - 1) / 2;
        if (log2k * static_cast<double>(edge_count) >
            static_cast<double>(options.guard_log2_colourings))
            throw std::invalid_argument(
                "feasibility guard: k^edges exceeds 2^" +
                std::to_string(options.guard_log2_colourings) + " at order " +
                std::to_string(m));

        OrderProbe probe = directed ? probe_order_directed(m, targets, plans, firsts, options)
                                    : probe_order_oriented(m, targets, plans, firsts, options);
        result.stats.merge(probe.stats);
        if (!probe.avoiding_found) {
            result.value = m;
            result.conclusive = true;
            return result;
        }
        if (probe.witness)
            for (std::size_t i = 0; i < targets.size(); ++i)
                if (contains_monochromatic_copy(*probe.witness, static_cast<int>(i) + 1,
                                                targets[i]))
                    throw std::logic_error("witness failed its oracle re-check");
        result.largest_avoiding_order = m;
        result.witness = std::move(probe.witness);
    }
    result.conclusive = false; // value exceeds n_max; report the bound so far
    return result;
}

} // namespace

SearchResult oriented_ramsey_exact(const std::vector<OrientedTree>& targets, int n_max,
                                   const SearchOptions& options) {
    return ramsey_exact(targets, n_max, options, false);
}

SearchResult directed_ramsey_exact(const std::vector<OrientedTree>& targets, int n_max,
                                   const SearchOptions& options) {
    return ramsey_exact(targets, n_max, options, true);
}

} // namespace diramsey
