#include "diramsey/enumerate.hpp"

#include <stdexcept>

namespace diramsey {

namespace {

constexpr int kHardLimit = 10;

// bit-sequence lexicographic order with pair 0 read first: at the first
// differing position the smaller code carries a 0
bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    return (a & (d & (~d + 1))) == 0;
}

// Backtracking comparison of the relabelled code against the reference,
// column by column: placing sigma(j) fixes the j-th column, so mismatches
// prune whole branches.
struct CanonicalSearch {
    const TournamentCode& t;
    std::uint64_t best;
    bool strictly_smaller_found = false;

    explicit CanonicalSearch(const TournamentCode& tt) : t(tt), best(tt.bits) {}

    // decide whether any permutation beats `best`; if keep_improving, keep
    // searching for the minimum instead of stopping at the first witness
    void search(bool keep_improving) {
        std::vector<int> sigma; // sigma[j] = original vertex placed at j
        std::vector<char> used(t.n, 0);
        descend(sigma, used, 0, keep_improving);
    }

    void descend(std::vector<int>& sigma, std::vector<char>& used, std::uint64_t acc,
                 bool keep_improving) {
        const int j = static_cast<int>(sigma.size());
        if (j == t.n) {
            if (lex_less(acc, best)) {
                best = acc;
                strictly_smaller_found = true;
            }
            return;
        }
        for (int v = 0; v < t.n; ++v) {
            if (used[v]) continue;
            // bits of column j under this placement
            std::uint64_t col = 0;
            for (int i = 0; i < j; ++i)
                if (t.has_edge(sigma[i], v)) col |= std::uint64_t{1} << i;
            std::uint64_t acc2 = acc | (col << TournamentCode::pair_index(0, j));
            // compare the fixed prefix (everything up to column j inclusive)
            const int prefix_bits = TournamentCode::pair_index(0, j + 1);
            const std::uint64_t mask = prefix_bits >= 64
                                           ? ~std::uint64_t{0}
                                           : ((std::uint64_t{1} << prefix_bits) - 1);
            const std::uint64_t ours = acc2 & mask, ref = best & mask;
            if (lex_less(ref, ours)) continue; // worse on the fixed prefix
            if (lex_less(ours, ref) && !keep_improving) {
                strictly_smaller_found = true;
                return;
            }
            sigma.push_back(v);
            used[v] = 1;
            descend(sigma, used, acc2, keep_improving);
            used[v] = 0;
            sigma.pop_back();
            if (strictly_smaller_found && !keep_improving) return;
        }
    }
};

} // namespace

bool is_canonical(const TournamentCode& t) {
    if (t.n <= 1) return true;
    CanonicalSearch s(t);
    s.search(false);
    return !s.strictly_smaller_found;
}

TournamentCode canonical_form(const TournamentCode& t) {
    if (t.n <= 1) return t;
    CanonicalSearch s(t);
    s.search(true);
    return TournamentCode{t.n, s.best};
}

void enumerate_tournaments(int n, const std::function<void(const TournamentCode&)>& fn,
                           int limit) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (limit > kHardLimit) limit = kHardLimit;
    if (n > limit)
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " beyond the enumeration limit " + std::to_string(limit));

    // orderly generation: canonical codes are closed under deleting the
    // last vertex, so extend each canonical (m-1)-code by every in/out
    // pattern of a new vertex and keep the canonical children
    std::vector<TournamentCode> level{TournamentCode{1, 0}};
    for (int m = 2; m <= n; ++m) {
        std::vector<TournamentCode> next;
        const int col_base = TournamentCode::pair_index(0, m - 1);
        for (const TournamentCode& parent : level) {
            for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (m - 1)); ++pattern) {
                TournamentCode child{m, parent.bits | (pattern << col_base)};
                if (is_canonical(child)) next.push_back(child);
            }
        }
        level = std::move(next);
    }
    for (const auto& t : level) fn(t);
}

std::vector<TournamentCode> enumerate_tournaments(int n, int limit) {
    std::vector<TournamentCode> out;
    enumerate_tournaments(n, [&](const TournamentCode& t) { out.push_back(t); }, limit);
    return out;
}

std::vector<std::vector<int>> tournament_automorphisms(const TournamentCode& t) {
    std::vector<std::vector<int>> autos;
    std::vector<int> sigma;
    std::vector<char> used(t.n, 0);
    std::function<void()> descend = [&]() {
        const int j = static_cast<int>(sigma.size());
        if (j == t.n) {
            autos.push_back(sigma);
            return;
        }
        for (int v = 0; v < t.n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (t.has_edge(i, j) != t.has_edge(sigma[i], v)) ok = false;
            if (!ok) continue;
            sigma.push_back(v);
            used[v] = 1;
            descend();
            used[v] = 0;
            sigma.pop_back();
        }
    };
    descend();
    return autos;
}

ColouredDigraph tournament_to_host(const TournamentCode& t, int colours,
                                   const std::vector<int>& edge_colours) {
    std::vector<ColouredDigraph::Edge> edges;
    int e = 0;
    for (int j = 1; j < t.n; ++j)
        for (int i = 0; i < j; ++i, ++e) {
            int c = edge_colours.empty() ? 1 : edge_colours[e];
            if (t.edge_low_high(i, j)) edges.push_back({i, j, c});
            else edges.push_back({j, i, c});
        }
    return ColouredDigraph(std::max(t.n, 1), HostKind::Tournament, colours, edges);
}

} // namespace diramsey
