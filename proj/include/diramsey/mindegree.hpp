#pragma once

#include "diramsey/coloured_digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace diramsey {

// Exact fraction for density thresholds, so integer guarantees never fall
// to floating-point rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Disjoint X, Y with every x in X having >= threshold out-neighbours in Y
// and every y in Y having >= threshold in-neighbours in X, all within one
// colour class (colour 0 when the pair refers to all edges).
struct MindegreePair {
    Bitset X, Y;
    int threshold = 0;
    int colour = 0;
};

// nullopt when the pair is valid for the view.
std::optional<std::string> check_mindegree_pair(const ColourView& g, const MindegreePair& p);

// Deterministic replacement for the random-bipartition argument: start from
// the parity split, switch single vertices (or swap the side labels) while
// the directed cut is below e(G)/4, then peel low-degree vertices at the
// ceiling threshold ceil(eps*n/8). Requires e(G) >= eps * n(n-1)/2; with
// that density the peeling cannot empty a side.
MindegreePair find_mindegree_pair(const ColourView& g, Rational eps);

} // namespace diramsey
