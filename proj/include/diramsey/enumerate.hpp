#pragma once

#include "diramsey/coloured_digraph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace diramsey {

// Tournament on n <= 10 vertices packed into the upper triangle in
// column-major pair order ((0,1),(0,2),(1,2),(0,3),...): bit set means the
// edge runs low -> high. The prefix of the code is the code of the induced
// prefix subtournament, which is what makes orderly generation work.
struct TournamentCode {
    int n = 0;
    std::uint64_t bits = 0;

    bool edge_low_high(int i, int j) const { // i < j
        return (bits >> pair_index(i, j)) & 1u;
    }
    bool has_edge(int tail, int head) const {
        return tail < head ? edge_low_high(tail, head) : !edge_low_high(head, tail);
    }
    static int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

    bool operator==(const TournamentCode&) const = default;
};

// Lexicographically minimal code over all relabellings.
TournamentCode canonical_form(const TournamentCode& t);
bool is_canonical(const TournamentCode& t);

// Exactly one representative per isomorphism class, emitted in canonical
// code order by orderly generation. `limit` guards the combinatorial
// explosion (default 7; hard ceiling 10).
void enumerate_tournaments(int n, const std::function<void(const TournamentCode&)>& fn,
                           int limit = 7);
std::vector<TournamentCode> enumerate_tournaments(int n, int limit = 7);

// All label permutations preserving the adjacency (identity included).
std::vector<std::vector<int>> tournament_automorphisms(const TournamentCode& t);

ColouredDigraph tournament_to_host(const TournamentCode& t, int colours,
                                   const std::vector<int>& edge_colours);

} // namespace diramsey
