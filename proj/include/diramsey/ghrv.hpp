#pragma once

#include "diramsey/coloured_digraph.hpp"

#include <variant>
#include <vector>

namespace diramsey {

struct VertexPath {
    std::vector<int> vertices; // consecutive entries joined by forward edges
};
struct IndependentSet {
    std::vector<int> vertices;
};

// Constructive Gallai-Hasse-Roy-Vitaver dichotomy: grow an edge-maximal
// acyclic spanning subgraph D' greedily in fixed edge order, level every
// vertex by the longest D'-path ending there, and return either a longest
// D'-path of length >= target_length or the largest level class (an
// independent set of size >= |G| / max(target_length, 1)).
//
// The levelling is a proper colouring of the view; this is re-checked on
// every run and a violation raises std::logic_error.
struct GhrvOutcome {
    std::variant<VertexPath, IndependentSet> result;
    std::vector<int> levels; // per host vertex; -1 outside the domain
};

GhrvOutcome ghrv_dichotomy(const ColourView& g, int target_length);

} // namespace diramsey
