#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/oriented_tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace diramsey {

struct SearchStats {
    std::uint64_t hosts_enumerated = 0;
    std::uint64_t colourings_tested = 0; // complete colourings reached
    std::uint64_t prunes = 0;            // branch cuts (forced copy or dominated prefix)

    void merge(const SearchStats& o) {
        hosts_enumerated += o.hosts_enumerated;
        colourings_tested += o.colourings_tested;
        prunes += o.prunes;
    }
};

struct SearchOptions {
    // canonical tournament enumeration cap; 0 picks the default for the
    // colour count (7 for up to two colours, 5 beyond)
    int enumeration_limit = 0;
    int jobs = 1;
    // feasibility guard: refuse hosts whose worst-case colouring count
    // exceeds 2^guard_log2_colourings
    int guard_log2_colourings = 42;
};

// Exact Ramsey computation: value = least order at which every host and
// every k-colouring contains some colour-i copy of T_i; the witness is an
// extremal colouring one vertex below (or at the largest inconclusive
// order). Colouring enumeration is a DFS over edges in a fixed canonical
// order with incremental monochromatic-copy pruning and host-automorphism
// prefix domination.
struct SearchResult {
    std::vector<OrientedTree> targets;
    int colours = 0;
    std::optional<int> value;
    int largest_avoiding_order = 0;
    std::optional<ColouredDigraph> witness;
    SearchStats stats;
    bool conclusive = false;
};

// hosts = all tournaments (one per isomorphism class)
SearchResult oriented_ramsey_exact(const std::vector<OrientedTree>& targets, int n_max,
                                   const SearchOptions& options = {});
// hosts = the complete digraph of each order
SearchResult directed_ramsey_exact(const std::vector<OrientedTree>& targets, int n_max,
                                   const SearchOptions& options = {});

} // namespace diramsey
